#pragma once

#include "ecg/colored_graph.hpp"

namespace ecg {

/**
 * The staircase coloring of K_n: edge {u,v} with u < v wears color u+1, so
 * the palette is 1..n-1. It has no rainbow triangle at all (the two edges at
 * the smallest vertex of any triangle share a color), which makes e + c =
 * C(n,2) + n - 1 the classical extremal value for triangle-free-rainbow
 * colorings. Requires n >= 2.
 */
ColoredGraph build_tn(int n);

/**
 * K_n built around a staircase block on the first n-m+1 vertices; every edge
 * touching the other m-1 vertices gets its own fresh color. Reaches
 * c = m*n - C(m+1,2) distinct colors yet has no m vertex-disjoint rainbow
 * triangles: each rainbow triangle must touch the m-1 non-staircase vertices.
 * Requires m >= 1 and n >= m+1. With m = 1 this is exactly build_tn(n).
 */
ColoredGraph build_main_construction(int n, int m);

/**
 * Iterated-join coloring: start from the staircase on n-5m+5 vertices, then
 * join m-1 rainbow K_5 blocks one at a time, 10 fresh colors inside each
 * block and a single fresh color for all edges from the new block to
 * everything before it. c = n + 6m - 7. Requires m >= 1 and n >= 5m.
 */
ColoredGraph build_lili_construction(int n, int m);

/**
 * Single join of a staircase on n-3m+1 vertices with a rainbow K_{3m-1};
 * all cross edges share one fresh color. c = n - 3m + C(3m-1,2) + 1, and
 * every rainbow triangle lies inside the K_{3m-1} block. Requires m >= 1 and
 * n >= 3m.
 */
ColoredGraph build_join_construction(int n, int m);

/**
 * Edge count of the balanced complete k-partite graph on n vertices
 * (part sizes differ by at most one; the remainder goes to the earliest
 * parts). Requires 1 <= k <= n.
 */
long long turan_edges(int n, int k);

/**
 * Minimum number of colors that forces a rainbow K_k in any coloring of K_n
 * using that many distinct colors: n for k = 3, turan_edges(n, k-2) + 2 for
 * k >= 4. The k = 3 value is taken for the graph's own order n. Requires
 * n >= k >= 3.
 */
long long anti_ramsey_rb(int n, int k);

}  // namespace ecg
