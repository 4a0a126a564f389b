#pragma once

#include <optional>
#include <string>

#include "ecg/colored_graph.hpp"

namespace ecg {

// Registry of the implemented threshold formulas. The ids are the stable
// tokens used by the CLI and by reports; the doc lines say what each one
// states about an edge-colored graph on n vertices.
//
//   thm11              e+c >= C(n+1,2)            forces a rainbow triangle
//   thm12              e+c >= C(n,2)+t(n,k-2)+2   forces a rainbow K_k (k>=4)
//   cor13              e+c >= C(n,2)+rb(n,k)      forces a rainbow K_k
//   prop14_f           e+c >= f(k,m,n)            forces m disjoint rainbow K_k
//   thm15              c  >  m*n-C(m+1,2)         forces m disjoint rainbow
//                                                 triangles on complete hosts
//                                                 with n >= 9m+8 (strict)
//   conj14             e+c >  C(n,2)+m*n-C(m+1,2) conjectured to force m
//                                                 disjoint rainbow triangles
//                                                 for n >= 5m+2 (strict)
//   lili_edge_disjoint e+c >= C(n+1,2)+3k-3       forces k edge-disjoint
//                                                 rainbow triangles (threshold
//                                                 exposed only; no checker)
enum class BoundId {
  thm11,
  thm12,
  cor13,
  prop14_f,
  thm15,
  conj14,
  lili_edge_disjoint,
};

enum class BoundTarget { edges_plus_colors, colors };

struct BoundQuery {
  BoundId id;
  int n = 0;
  int m = 0;  // number of disjoint subgraphs requested, where relevant
  int k = 0;  // clique order, where relevant
};

struct BoundThreshold {
  long long value = 0;
  bool strict = false;  // strict: hypothesis is target > value; else >=
  BoundTarget target = BoundTarget::edges_plus_colors;
};

/** Threshold for the given bound; throws std::invalid_argument on bad params. */
BoundThreshold bound_value(const BoundQuery& q);

/**
 * f(k,m,n) = C(n-k(m-1),2) + rb(n-k(m-1),k) + k(m-1)(2n-1) - k^2 (m-1)^2,
 * the e+c level at which m vertex-disjoint rainbow K_k are forced. Peeling
 * one rainbow K_k off K_n costs at most 2k(n-k)+k(k-1) of e+c, and f is
 * pinned so that f(k,m,n) - f(k,m-1,n-k) equals exactly that loss.
 * Requires k >= 3, m >= 1, n >= k*m.
 */
long long disjoint_clique_sum_threshold(int k, int m, int n);

/**
 * The e+c level, C(n+1,2) + 6m - 6, once conjectured to force m vertex-
 * disjoint rainbow triangles. build_main_construction(10, 2) meets it with
 * room to spare and has no two disjoint rainbow triangles, so it is kept
 * only for reproducing that refutation in reports.
 */
long long refuted_mk3_conjecture_threshold(int n, int m);

std::string to_string(BoundId id);
std::optional<BoundId> bound_id_from_string(const std::string& s);

}  // namespace ecg
