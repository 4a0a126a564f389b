#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ecg/bitset.hpp"

namespace ecg {

// Color labels are arbitrary non-negative integers; only equality between
// them ever matters.
using ColorId = std::int64_t;

struct Edge {
  int u = 0;
  int v = 0;
  ColorId color = 0;
  auto operator<=>(const Edge&) const = default;
};

/**
 * An undirected, simple, edge-colored graph.
 *
 * Vertices live in a fixed universe [0, universe_size()) and keep their
 * indices for the whole lifetime of the object: without() marks vertices dead
 * instead of renumbering, so a vertex named in one report means the same
 * vertex in every later report about a peeled subgraph.
 *
 * Mutation (set_edge) is intended for a build phase; all queries are const
 * and safe to run concurrently once building is done.
 */
class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(int n);

  /** Size of the index universe, including dead vertices. */
  int universe_size() const { return n_; }
  /** Number of alive vertices. */
  int order() const { return alive_count_; }
  bool is_alive(int v) const { return v >= 0 && v < n_ && alive_.test(v); }
  const Bitset& alive_mask() const { return alive_; }
  /** Alive vertices in ascending order. */
  std::vector<int> vertices() const { return alive_.to_vector(); }

  /**
   * Inserts the edge {u,v} with the given color, or recolors it if present.
   * Both endpoints must be distinct alive vertices and color must be >= 0.
   */
  void set_edge(int u, int v, ColorId color);

  bool has_edge(int u, int v) const;
  std::optional<ColorId> find_color(int u, int v) const;
  /** Color of an edge that must exist; throws std::out_of_range otherwise. */
  ColorId color(int u, int v) const;

  int edge_count() const { return static_cast<int>(edge_color_.size()); }
  /** Number of distinct colors appearing on at least one edge. */
  int color_count() const { return static_cast<int>(color_mult_.size()); }
  /** Smallest ColorId strictly above every color in use (0 when empty). */
  ColorId next_fresh_color() const;

  /** Alive neighbors of v as a bitset over the universe. */
  const Bitset& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }

  /** True when every pair of alive vertices is joined by an edge. */
  bool is_complete() const;

  /**
   * The graph with the vertices in `removed` deleted: they are marked dead
   * and every incident edge is dropped. All entries must be alive and the
   * list must not repeat a vertex. Indices of the survivors are unchanged.
   */
  ColoredGraph without(std::span<const int> removed) const;

  /** True when s induces a clique whose edge colors are pairwise distinct. */
  bool is_rainbow_clique(std::span<const int> s) const;

  /** Edges keyed by (u,v) with u < v; iteration order is lexicographic. */
  const std::map<std::pair<int, int>, ColorId>& edge_map() const { return edge_color_; }
  std::vector<Edge> edges() const;
  /** Distinct colors in ascending order. */
  std::vector<ColorId> palette() const;
  /** color -> number of edges wearing it. */
  const std::map<ColorId, int>& color_multiplicity() const { return color_mult_; }

  bool operator==(const ColoredGraph&) const = default;

 private:
  void require_alive(int v, const char* what) const;

  int n_ = 0;
  int alive_count_ = 0;
  Bitset alive_;
  std::vector<Bitset> adj_;
  std::map<std::pair<int, int>, ColorId> edge_color_;
  std::map<ColorId, int> color_mult_;
};

/** Complete graph on n vertices, every edge colored `color`. */
ColoredGraph complete_graph(int n, ColorId color = 0);

}  // namespace ecg
