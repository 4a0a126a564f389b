#include "ecg/saturation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ecg {
namespace {

Bitset member_mask(const ColoredGraph& g, std::span<const int> a, const char* what) {
  Bitset mask(g.universe_size());
  for (int v : a) {
    if (!g.is_alive(v))
      throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                  " not alive");
    if (mask.test(v))
      throw std::invalid_argument(std::string(what) + ": vertex listed twice");
    mask.set(v);
  }
  return mask;
}

std::vector<ColorId> saturated_by_mask(const ColoredGraph& g, const Bitset& mask) {
  std::unordered_set<ColorId> missed;
  for (const auto& [key, c] : g.edge_map())
    if (!mask.test(key.first) && !mask.test(key.second)) missed.insert(c);
  std::vector<ColorId> out;
  for (const auto& [c, mult] : g.color_multiplicity())
    if (!missed.contains(c)) out.push_back(c);
  return out;  // ascending: color_multiplicity is an ordered map
}

std::vector<ColorId> ideal_by_set(const ColoredGraph& g, std::span<const int> a,
                                  const Bitset& mask) {
  if (a.empty()) return {};
  std::vector<ColorId> sat = saturated_by_mask(g, mask);
  // subtract everything saturated by a maximal proper subset; saturation is
  // monotone, so smaller subsets are covered by these
  std::vector<ColorId> covered;
  for (size_t skip = 0; skip < a.size(); ++skip) {
    Bitset sub = mask;
    sub.reset(a[skip]);
    for (ColorId c : saturated_by_mask(g, sub)) covered.push_back(c);
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  std::vector<ColorId> out;
  std::set_difference(sat.begin(), sat.end(), covered.begin(), covered.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<ColorId> saturated_colors(const ColoredGraph& g, std::span<const int> a) {
  return saturated_by_mask(g, member_mask(g, a, "saturated_colors"));
}

int saturated_color_count(const ColoredGraph& g, std::span<const int> a) {
  return static_cast<int>(saturated_colors(g, a).size());
}

std::vector<ColorId> ideally_saturated_colors(const ColoredGraph& g, std::span<const int> a) {
  return ideal_by_set(g, a, member_mask(g, a, "ideally_saturated_colors"));
}

int ideally_saturated_color_count(const ColoredGraph& g, std::span<const int> a) {
  return static_cast<int>(ideally_saturated_colors(g, a).size());
}

PrefixSaturation phi_sequence_detail(const ColoredGraph& g, std::span<const int> seq) {
  if (seq.empty()) throw std::invalid_argument("phi_sequence: empty sequence");
  member_mask(g, seq, "phi_sequence");  // validates alive + distinct
  PrefixSaturation out;
  Bitset mask(g.universe_size());
  for (size_t i = 0; i < seq.size(); ++i) {
    mask.set(seq[i]);
    out.prefix_colors.push_back(ideal_by_set(g, seq.subspan(0, i + 1), mask));
    out.total += static_cast<int>(out.prefix_colors.back().size());
  }
  return out;
}

int phi_sequence(const ColoredGraph& g, std::span<const int> seq) {
  return phi_sequence_detail(g, seq).total;
}

WitnessEdges witness_edges(const ColoredGraph& g, std::span<const int> seq, int k) {
  if (k < 0) throw std::invalid_argument("witness_edges: need k >= 0");
  PrefixSaturation phi = phi_sequence_detail(g, seq);
  int n_seq = static_cast<int>(seq.size());
  if (phi.total < k + n_seq - 1)
    throw std::invalid_argument("hypothesis not satisfied: phi_sequence " +
                                std::to_string(phi.total) + " < " +
                                std::to_string(k + n_seq - 1));
  int v1 = seq[0];
  Bitset tail(g.universe_size());
  for (size_t i = 1; i < seq.size(); ++i) tail.set(seq[i]);

  WitnessEdges out;
  const Bitset& nb = g.neighbors(v1);
  for (const auto& prefix : phi.prefix_colors) {
    for (ColorId r : prefix) {
      // a color ideally saturated by a prefix containing v1 must show up on
      // an edge at v1; take the first such neighbor
      int hit = -1;
      for (int w = nb.find_first(); w >= 0; w = nb.find_next(w + 1)) {
        if (g.color(v1, w) == r) {
          hit = w;
          break;
        }
      }
      if (hit < 0) throw std::logic_error("witness_edges: saturated color missing at pivot");
      if (tail.test(hit)) continue;  // at most |seq|-1 of these get discarded
      out.edges.emplace_back(v1, hit);
      out.colors.push_back(r);
    }
  }
  if (static_cast<int>(out.edges.size()) < k)
    throw std::logic_error("witness_edges: fewer edges than certified");
  return out;
}

SubsetSumCheck subset_sum_check(const ColoredGraph& g, std::span<const int> a, int cap) {
  if (static_cast<int>(a.size()) > cap)
    throw std::invalid_argument("subset_sum_check: set larger than cap " + std::to_string(cap));
  Bitset mask = member_mask(g, a, "subset_sum_check");
  SubsetSumCheck out;
  std::vector<ColorId> sat = saturated_by_mask(g, mask);
  out.d_s = static_cast<int>(sat.size());

  std::vector<ColorId> decomposed;
  std::vector<int> subset;
  for (uint32_t bits = 0; bits < (uint32_t{1} << a.size()); ++bits) {
    subset.clear();
    for (size_t i = 0; i < a.size(); ++i)
      if (bits & (uint32_t{1} << i)) subset.push_back(a[i]);
    Bitset sub(g.universe_size());
    for (int v : subset) sub.set(v);
    auto ideal = ideal_by_set(g, subset, sub);
    out.sum_phi += static_cast<int>(ideal.size());
    decomposed.insert(decomposed.end(), ideal.begin(), ideal.end());
  }
  std::sort(decomposed.begin(), decomposed.end());
  decomposed.erase(std::unique(decomposed.begin(), decomposed.end()), decomposed.end());
  out.decomposes = decomposed == sat;
  return out;
}

uint64_t SaturationIndex::pack2(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(a) << 20) | static_cast<uint64_t>(b);
}

uint64_t SaturationIndex::pack3(int a, int b, int c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(a) << 40) | (static_cast<uint64_t>(b) << 20) |
         static_cast<uint64_t>(c);
}

int SaturationIndex::phi2(int u, int v) const {
  auto it = phi2_.find(pack2(u, v));
  return it == phi2_.end() ? 0 : it->second;
}

int SaturationIndex::phi3(int u, int v, int w) const {
  auto it = phi3_.find(pack3(u, v, w));
  return it == phi3_.end() ? 0 : it->second;
}

SaturationIndex::SaturationIndex(const ColoredGraph& g)
    : phi1_(static_cast<size_t>(g.universe_size()), 0) {
  std::unordered_map<ColorId, std::vector<std::pair<int, int>>> classes;
  for (const auto& [key, c] : g.edge_map()) classes[c].push_back(key);

  using EdgeList = std::vector<std::pair<int, int>>;
  auto covers = [](const EdgeList& es, int x, int y, int z) {
    for (const auto& [u, v] : es)
      if (u != x && u != y && u != z && v != x && v != y && v != z) return false;
    return true;
  };

  std::vector<uint64_t> pairs, triples;
  for (const auto& [color, es] : classes) {
    // vertices lying on every edge of the class: the minimal 1-covers
    int i0 = es[0].first, i1 = es[0].second;
    for (const auto& [u, v] : es) {
      if (i0 != u && i0 != v) i0 = -1;
      if (i1 != u && i1 != v) i1 = -1;
      if (i0 < 0 && i1 < 0) break;
    }
    if (i0 >= 0) ++phi1_[static_cast<size_t>(i0)];
    if (i1 >= 0) ++phi1_[static_cast<size_t>(i1)];
    if (es.size() == 1) continue;  // a single edge has no minimal cover of size 2 or 3

    pairs.clear();
    triples.clear();
    auto [a, b] = es[0];  // every cover hits the first edge
    for (int c1 : {a, b}) {
      EdgeList m1;
      for (const auto& e : es)
        if (e.first != c1 && e.second != c1) m1.push_back(e);
      if (m1.empty()) continue;  // {c1} already covers the class

      // minimal pairs {c1, z}: z must lie on every edge missing c1
      int z0 = m1[0].first, z1 = m1[0].second;
      for (const auto& [u, v] : m1) {
        if (z0 != u && z0 != v) z0 = -1;
        if (z1 != u && z1 != v) z1 = -1;
      }
      for (int z : {z0, z1})
        if (z >= 0 && z != i0 && z != i1) pairs.push_back(pack2(c1, z));

      // minimal triples {c1, c2, c3}: hit the first edge missing c1, then the
      // third vertex must lie on every edge missing both
      auto [c, d] = m1[0];
      for (int c2 : {c, d}) {
        EdgeList m2;
        for (const auto& e : m1)
          if (e.first != c2 && e.second != c2) m2.push_back(e);
        if (m2.empty()) continue;  // {c1,c2} covers; belongs to the pair pass
        int y0 = m2[0].first, y1 = m2[0].second;
        for (const auto& [u, v] : m2) {
          if (y0 != u && y0 != v) y0 = -1;
          if (y1 != u && y1 != v) y1 = -1;
        }
        for (int c3 : {y0, y1}) {
          if (c3 < 0) continue;
          if (covers(es, c1, c3, -1) || covers(es, c2, c3, -1)) continue;
          triples.push_back(pack3(c1, c2, c3));
        }
      }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (uint64_t p : pairs) ++phi2_[p];
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    for (uint64_t t : triples) ++phi3_[t];
  }
}

}  // namespace ecg
