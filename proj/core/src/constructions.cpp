#include "ecg/constructions.hpp"

#include <stdexcept>
#include <string>

namespace ecg {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Staircase coloring restricted to vertices [0, count); colors 1..count-1.
// Tolerates count == 1 (a bare vertex) for the joins below.
void paint_staircase(ColoredGraph& g, int count) {
  for (int u = 0; u < count; ++u)
    for (int v = u + 1; v < count; ++v) g.set_edge(u, v, u + 1);
}

// Rainbow clique on [first, first+count) taking colors fresh, fresh+1, ...
// in lexicographic edge order. Returns the next unused color.
ColorId paint_rainbow_block(ColoredGraph& g, int first, int count, ColorId fresh) {
  for (int u = first; u < first + count; ++u)
    for (int v = u + 1; v < first + count; ++v) g.set_edge(u, v, fresh++);
  return fresh;
}

}  // namespace

ColoredGraph build_tn(int n) {
  require(n >= 2, "build_tn: need n >= 2");
  ColoredGraph g(n);
  paint_staircase(g, n);
  return g;
}

ColoredGraph build_main_construction(int n, int m) {
  require(m >= 1, "build_main_construction: need m >= 1");
  require(n >= m + 1, "build_main_construction: need n >= m+1");
  ColoredGraph g(n);
  int block = n - m + 1;
  paint_staircase(g, block);
  ColorId fresh = block;  // staircase used 1..block-1
  for (int u = 0; u < n; ++u)
    for (int v = std::max(u + 1, block); v < n; ++v) g.set_edge(u, v, fresh++);
  return g;
}

ColoredGraph build_lili_construction(int n, int m) {
  require(m >= 1, "build_lili_construction: need m >= 1");
  require(n >= 5 * m, "build_lili_construction: need n >= 5m");
  ColoredGraph g(n);
  int base = n - 5 * m + 5;
  paint_staircase(g, base);
  ColorId fresh = base;
  for (int j = 0; j < m - 1; ++j) {
    int first = base + 5 * j;
    fresh = paint_rainbow_block(g, first, 5, fresh);
    ColorId cross = fresh++;
    for (int v = first; v < first + 5; ++v)
      for (int u = 0; u < first; ++u) g.set_edge(u, v, cross);
  }
  return g;
}

ColoredGraph build_join_construction(int n, int m) {
  require(m >= 1, "build_join_construction: need m >= 1");
  require(n >= 3 * m, "build_join_construction: need n >= 3m");
  ColoredGraph g(n);
  int block = n - 3 * m + 1;
  paint_staircase(g, block);
  ColorId fresh = block;
  fresh = paint_rainbow_block(g, block, 3 * m - 1, fresh);
  ColorId cross = fresh;
  for (int u = 0; u < block; ++u)
    for (int v = block; v < n; ++v) g.set_edge(u, v, cross);
  return g;
}

long long turan_edges(int n, int k) {
  require(k >= 1 && k <= n, "turan_edges: need 1 <= k <= n");
  long long q = n / k, r = n % k;
  auto c2 = [](long long x) { return x * (x - 1) / 2; };
  // r parts of size q+1 (the earliest ones), k-r parts of size q
  return c2(n) - r * c2(q + 1) - (k - r) * c2(q);
}

long long anti_ramsey_rb(int n, int k) {
  require(k >= 3, "anti_ramsey_rb: need k >= 3");
  require(n >= k, "anti_ramsey_rb: need n >= k");
  if (k == 3) return n;
  return turan_edges(n, k - 2) + 2;
}

}  // namespace ecg
