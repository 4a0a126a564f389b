#include "ecg/rainbow.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecg {
namespace {

long long* stats_slot(SearchStats* stats) {
  static thread_local long long sink;
  return stats ? &stats->nodes_explored : &sink;
}

// Shared recursion for enumerate/find of rainbow k-cliques. Extends `cur`
// (ascending) with vertices above cur.back(); `used` holds the colors already
// inside the clique, kept sorted. Returns true to stop early (first hit).
struct CliqueGrower {
  const ColoredGraph& g;
  int k;
  bool first_only;
  long long* nodes;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<ColorId> used;

  bool candidate_colors_ok(int w, std::vector<ColorId>& added) {
    added.clear();
    for (int x : cur) {
      ColorId c = g.color(x, w);
      if (std::binary_search(used.begin(), used.end(), c)) return false;
      added.push_back(c);
    }
    std::sort(added.begin(), added.end());
    if (std::adjacent_find(added.begin(), added.end()) != added.end()) return false;
    return true;
  }

  bool grow(const Bitset& allowed) {
    ++*nodes;
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return first_only;
    }
    // not enough vertices left to finish the clique
    if (allowed.count() < k - static_cast<int>(cur.size())) return false;
    std::vector<ColorId> added;
    for (int w = allowed.find_first(); w >= 0; w = allowed.find_next(w + 1)) {
      if (!candidate_colors_ok(w, added)) continue;
      Bitset next = allowed & g.neighbors(w);
      // keep extensions strictly above w
      for (int t = next.find_first(); t >= 0 && t <= w; t = next.find_next(t + 1)) next.reset(t);
      cur.push_back(w);
      std::vector<ColorId> merged;
      merged.reserve(used.size() + added.size());
      std::merge(used.begin(), used.end(), added.begin(), added.end(),
                 std::back_inserter(merged));
      std::swap(used, merged);
      bool stop = grow(next);
      std::swap(used, merged);
      cur.pop_back();
      if (stop) return true;
    }
    return false;
  }
};

std::vector<std::vector<int>> run_grower(const ColoredGraph& g, int k, bool first_only,
                                         SearchStats* stats) {
  if (k < 1) throw std::invalid_argument("rainbow clique search: need k >= 1");
  CliqueGrower grower{g, k, first_only, stats_slot(stats), {}, {}, {}};
  Bitset all = g.alive_mask();
  grower.grow(all);
  return std::move(grower.out);
}

struct PackSearch {
  int k;
  int want;                // stop as soon as a pack of this size is found (0: maximize)
  long long* nodes;
  std::vector<std::vector<int>> cliques;        // lexicographic
  std::vector<std::vector<int>> cliques_at;     // indices of cliques by minimum vertex
  std::vector<std::vector<int>> chosen;
  std::vector<std::vector<int>> best;

  bool usable(const std::vector<int>& c, const Bitset& avail) {
    for (int v : c)
      if (!avail.test(v)) return false;
    return true;
  }

  // Branch rule: the smallest available vertex is either covered by one of
  // its candidate cliques or set aside for good. Bound: even packing every
  // remaining available vertex cannot beat/ reach the target.
  bool run(Bitset avail) {
    ++*nodes;
    int target = want ? want : static_cast<int>(best.size()) + 1;
    if (static_cast<int>(chosen.size()) + avail.count() / k < target) return false;
    int v = avail.find_first();
    if (v < 0) {
      if (chosen.size() > best.size()) best = chosen;
      return want && static_cast<int>(best.size()) >= want;
    }
    for (int idx : cliques_at[static_cast<size_t>(v)]) {
      const auto& c = cliques[static_cast<size_t>(idx)];
      if (!usable(c, avail)) continue;
      Bitset next = avail;
      for (int x : c) next.reset(x);
      chosen.push_back(c);
      if (static_cast<int>(chosen.size()) > static_cast<int>(best.size())) best = chosen;
      if (want && static_cast<int>(chosen.size()) >= want) {
        chosen.pop_back();
        return true;
      }
      bool stop = run(next);
      chosen.pop_back();
      if (stop) return true;
    }
    Bitset skip = avail;
    skip.reset(v);
    return run(skip);
  }
};

std::vector<std::vector<int>> pack_search(const ColoredGraph& g,
                                          std::vector<std::vector<int>> cliques, int k, int want,
                                          SearchStats* stats) {
  PackSearch ps{k, want, stats_slot(stats), std::move(cliques), {}, {}, {}};
  ps.cliques_at.assign(static_cast<size_t>(g.universe_size()), {});
  for (size_t i = 0; i < ps.cliques.size(); ++i)
    ps.cliques_at[static_cast<size_t>(ps.cliques[i].front())].push_back(static_cast<int>(i));
  ps.run(g.alive_mask());
  return ps.best;
}

}  // namespace

std::vector<Triangle> enumerate_rainbow_triangles(const ColoredGraph& g) {
  std::vector<Triangle> out;
  for (const auto& [key, cuv] : g.edge_map()) {
    auto [u, v] = key;
    Bitset common = g.neighbors(u) & g.neighbors(v);
    for (int w = common.find_next(v + 1); w >= 0; w = common.find_next(w + 1)) {
      ColorId cuw = g.color(u, w), cvw = g.color(v, w);
      if (cuv != cuw && cuv != cvw && cuw != cvw) out.push_back({u, v, w});
    }
  }
  return out;
}

std::vector<std::vector<int>> enumerate_rainbow_cliques(const ColoredGraph& g, int k) {
  return run_grower(g, k, false, nullptr);
}

std::optional<std::vector<int>> find_rainbow_clique(const ColoredGraph& g, int k,
                                                    SearchStats* stats) {
  auto hits = run_grower(g, k, true, stats);
  if (hits.empty()) return std::nullopt;
  return hits.front();
}

std::optional<CliquePack> find_disjoint_rainbow_cliques(const ColoredGraph& g, int k, int m,
                                                        SearchStats* stats) {
  if (k < 3) throw std::invalid_argument("find_disjoint_rainbow_cliques: need k >= 3");
  if (m < 1) throw std::invalid_argument("find_disjoint_rainbow_cliques: need m >= 1");
  auto cliques = enumerate_rainbow_cliques(g, k);
  auto best = pack_search(g, std::move(cliques), k, m, stats);
  if (static_cast<int>(best.size()) < m) return std::nullopt;
  best.resize(static_cast<size_t>(m));
  std::sort(best.begin(), best.end());
  return CliquePack{std::move(best)};
}

MaxPackResult max_disjoint_rainbow_triangles(const ColoredGraph& g, SearchStats* stats) {
  auto tris = enumerate_rainbow_triangles(g);
  std::vector<std::vector<int>> cliques;
  cliques.reserve(tris.size());
  for (const auto& t : tris) cliques.push_back({t[0], t[1], t[2]});
  auto best = pack_search(g, std::move(cliques), 3, 0, stats);
  MaxPackResult res;
  res.count = static_cast<int>(best.size());
  for (const auto& c : best) res.pack.triangles.push_back({c[0], c[1], c[2]});
  std::sort(res.pack.triangles.begin(), res.pack.triangles.end());
  return res;
}

bool validate_triangle_pack(const ColoredGraph& g, const TrianglePack& pack) {
  Bitset seen(g.universe_size());
  for (const auto& t : pack.triangles) {
    for (int v : t) {
      if (!g.is_alive(v)) return false;
      if (seen.test(v)) return false;
      seen.set(v);
    }
    if (!g.is_rainbow_clique(t)) return false;
  }
  return true;
}

bool validate_clique_pack(const ColoredGraph& g, const CliquePack& pack, int k) {
  Bitset seen(g.universe_size());
  for (const auto& c : pack.cliques) {
    if (static_cast<int>(c.size()) != k) return false;
    for (int v : c) {
      if (!g.is_alive(v)) return false;
      if (seen.test(v)) return false;
      seen.set(v);
    }
    if (!g.is_rainbow_clique(c)) return false;
  }
  return true;
}

}  // namespace ecg
