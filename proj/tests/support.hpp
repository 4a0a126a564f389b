#pragma once

// Brute-force oracles and instance generators for the test suite. Everything
// here recomputes from first principles through a different route than the
// library (deletion instead of edge scans, bitmask subsets instead of
// maximal-subset recursion, triple loops instead of bitset rows), so a
// disagreement localizes a bug instead of mirroring it.

#include <algorithm>
#include <array>
#include <iterator>
#include <set>
#include <span>
#include <vector>

#include "ecg/colored_graph.hpp"
#include "ecg/rng.hpp"

namespace ecg::test {

inline ColoredGraph random_graph(Rng& rng, int n, double edge_p, int colors) {
  ColoredGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(edge_p)) g.set_edge(u, v, rng.below(colors));
  return g;
}

inline ColoredGraph random_complete(Rng& rng, int n, int colors) {
  ColoredGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v, rng.below(colors));
  return g;
}

inline std::vector<std::array<int, 3>> naive_rainbow_triangles(const ColoredGraph& g) {
  std::vector<std::array<int, 3>> out;
  int n = g.universe_size();
  for (int a = 0; a < n; ++a) {
    if (!g.is_alive(a)) continue;
    for (int b = a + 1; b < n; ++b) {
      if (!g.is_alive(b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!g.is_alive(c)) continue;
        auto ab = g.find_color(a, b), ac = g.find_color(a, c), bc = g.find_color(b, c);
        if (ab && ac && bc && *ab != *ac && *ab != *bc && *ac != *bc)
          out.push_back({a, b, c});
      }
    }
  }
  return out;
}

// saturated colors by their defining effect: the colors deletion removes
inline std::vector<ColorId> saturated_by_deletion(const ColoredGraph& g,
                                                  std::span<const int> a) {
  std::vector<ColorId> before = g.palette();
  std::vector<ColorId> after = g.without(a).palette();
  std::vector<ColorId> out;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::back_inserter(out));
  return out;
}

// ideal saturation straight from the definition: saturated by a, by no
// proper subset; subsets walked as bitmasks
inline std::vector<ColorId> naive_ideal(const ColoredGraph& g, const std::vector<int>& a) {
  if (a.empty()) return {};
  std::vector<ColorId> sat = saturated_by_deletion(g, a);
  std::set<ColorId> covered;
  unsigned full = (1u << a.size()) - 1;
  for (unsigned mask = 0; mask < full; ++mask) {
    std::vector<int> sub;
    for (size_t i = 0; i < a.size(); ++i)
      if (mask >> i & 1) sub.push_back(a[i]);
    for (ColorId r : saturated_by_deletion(g, sub)) covered.insert(r);
  }
  std::vector<ColorId> out;
  for (ColorId r : sat)
    if (!covered.count(r)) out.push_back(r);
  return out;
}

namespace detail {
inline int max_pack_rec(const std::vector<std::array<int, 3>>& ts, size_t i,
                        std::set<int>& used) {
  if (i == ts.size()) return 0;
  int best = max_pack_rec(ts, i + 1, used);
  const auto& t = ts[i];
  if (!used.count(t[0]) && !used.count(t[1]) && !used.count(t[2])) {
    used.insert(t.begin(), t.end());
    best = std::max(best, 1 + max_pack_rec(ts, i + 1, used));
    for (int v : t) used.erase(v);
  }
  return best;
}
}  // namespace detail

// exact maximum disjoint rainbow triangle pack by unpruned recursion;
// exponential, keep the triangle list small
inline int naive_max_disjoint_triangles(const ColoredGraph& g) {
  auto ts = naive_rainbow_triangles(g);
  std::set<int> used;
  return detail::max_pack_rec(ts, 0, used);
}

inline long long c2(long long x) { return x * (x - 1) / 2; }

}  // namespace ecg::test
