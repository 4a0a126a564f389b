#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ecg/colored_graph.hpp"

namespace ecg {

// A color R is saturated by a vertex set A when every edge wearing R meets A,
// i.e. removing A removes the color. It is ideally saturated by A when no
// proper subset of A already does the job; equivalently, A is a minimal
// vertex cover of R's edge class.

/** Colors saturated by a (ascending). Entries of a must be alive, distinct. */
std::vector<ColorId> saturated_colors(const ColoredGraph& g, std::span<const int> a);

/** |saturated_colors|, the saturated color degree: c(g) - c(g - a). */
int saturated_color_count(const ColoredGraph& g, std::span<const int> a);

/** Colors ideally saturated by a (ascending). Empty a yields {}. */
std::vector<ColorId> ideally_saturated_colors(const ColoredGraph& g, std::span<const int> a);

/** |ideally_saturated_colors|. */
int ideally_saturated_color_count(const ColoredGraph& g, std::span<const int> a);

/**
 * Sum over i of |ideally_saturated_colors({seq[0..i]})|, the prefix-wise
 * ideal saturation count of an ordered vertex sequence. Entries must be
 * distinct alive vertices; 1 <= |seq|.
 */
int phi_sequence(const ColoredGraph& g, std::span<const int> seq);

struct PrefixSaturation {
  std::vector<std::vector<ColorId>> prefix_colors;  // per prefix, ascending
  int total = 0;
};
PrefixSaturation phi_sequence_detail(const ColoredGraph& g, std::span<const int> seq);

struct WitnessEdges {
  std::vector<std::pair<int, int>> edges;  // each {seq[0], w}
  std::vector<ColorId> colors;             // pairwise distinct, parallel to edges
};

/**
 * At least k edges at seq[0] certified by the prefix saturation counts:
 * each edge avoids seq[1..] at its far end, the colors are pairwise
 * distinct, and every color is saturated by some prefix of seq. Requires
 * phi_sequence(g, seq) >= k + |seq| - 1; throws std::invalid_argument
 * ("hypothesis not satisfied") below that. One edge is collected per
 * (prefix, ideally saturated color), first lexicographic fit, and the at
 * most |seq|-1 edges landing inside the sequence are discarded.
 */
WitnessEdges witness_edges(const ColoredGraph& g, std::span<const int> seq, int k);

struct SubsetSumCheck {
  int d_s = 0;
  int sum_phi = 0;            // sum of phi over all subsets of a
  bool decomposes = true;     // every saturated color ideally saturated by some subset
};

/**
 * d^s(a) against the sum of ideal saturation counts over all subsets of a,
 * plus the decomposition check that explains why d^s <= sum holds. |a| is
 * capped (default 4) because the subset walk is exponential.
 */
SubsetSumCheck subset_sum_check(const ColoredGraph& g, std::span<const int> a, int cap = 4);

/**
 * Per-graph index answering ideal-saturation counts for all sets of size
 * <= 3 in O(1), built in one pass over the color classes: for every color
 * it enumerates the minimal vertex covers of the class with at most three
 * vertices (there are O(1) of them per class) and buckets the counts by
 * cover. Built once per peeling round; the definitional routines above stay
 * the ground truth in tests and audits.
 */
class SaturationIndex {
 public:
  explicit SaturationIndex(const ColoredGraph& g);

  int phi1(int v) const { return phi1_[static_cast<size_t>(v)]; }
  int phi2(int u, int v) const;       // unordered pair
  int phi3(int u, int v, int w) const;  // three distinct vertices

 private:
  static uint64_t pack2(int a, int b);
  static uint64_t pack3(int a, int b, int c);

  std::vector<int> phi1_;
  std::unordered_map<uint64_t, int> phi2_;
  std::unordered_map<uint64_t, int> phi3_;
};

}  // namespace ecg
