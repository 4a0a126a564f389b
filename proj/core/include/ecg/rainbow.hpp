#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ecg/colored_graph.hpp"

namespace ecg {

struct SearchStats {
  long long nodes_explored = 0;
};

using Triangle = std::array<int, 3>;

struct TrianglePack {
  std::vector<Triangle> triangles;  // each sorted ascending; pack sorted
};

struct CliquePack {
  std::vector<std::vector<int>> cliques;
};

/**
 * All triangles whose three edge colors are pairwise distinct, each sorted
 * ascending, the list in lexicographic order. Bitset row intersections; fine
 * up to a few hundred vertices.
 */
std::vector<Triangle> enumerate_rainbow_triangles(const ColoredGraph& g);

/**
 * All k-cliques whose C(k,2) edge colors are pairwise distinct, ascending
 * within each clique, lexicographic overall. k >= 1. Grows rainbow (k-1)-
 * cliques by their largest vertex, carrying the used-color set.
 */
std::vector<std::vector<int>> enumerate_rainbow_cliques(const ColoredGraph& g, int k);

/**
 * Lexicographically least rainbow k-clique, or nullopt. Same recursion as
 * the enumerator but stops at the first hit.
 */
std::optional<std::vector<int>> find_rainbow_clique(const ColoredGraph& g, int k,
                                                    SearchStats* stats = nullptr);

/**
 * m vertex-disjoint rainbow k-cliques, or nullopt if no such family exists
 * (the search is exhaustive, so nullopt is a proof of absence). Branches on
 * the smallest vertex still available: either some candidate clique through
 * it joins the pack, or the vertex is set aside. Deterministic; the witness
 * is the first pack in that fixed branch order. m >= 1, k >= 3.
 */
std::optional<CliquePack> find_disjoint_rainbow_cliques(const ColoredGraph& g, int k, int m,
                                                        SearchStats* stats = nullptr);

struct MaxPackResult {
  int count = 0;
  TrianglePack pack;
};

/**
 * Maximum number of vertex-disjoint rainbow triangles, with one witness of
 * that size. Exact branch-and-bound over the triangle list; intended for
 * small instances (hostile dense inputs are practical to about n = 15,
 * structured colorings much further).
 */
MaxPackResult max_disjoint_rainbow_triangles(const ColoredGraph& g, SearchStats* stats = nullptr);

/** Disjointness plus per-triangle rainbowness under g's coloring. */
bool validate_triangle_pack(const ColoredGraph& g, const TrianglePack& pack);
bool validate_clique_pack(const ColoredGraph& g, const CliquePack& pack, int k);

}  // namespace ecg
