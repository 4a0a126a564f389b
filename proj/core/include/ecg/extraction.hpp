#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ecg/colored_graph.hpp"
#include "ecg/rainbow.hpp"

namespace ecg {

enum class StepKind { vertex, triangle };

struct PeelStep {
  StepKind kind = StepKind::vertex;
  // vertex step: the firing tuple (v1..vN), N <= 3; only v1 gets deleted.
  // triangle step: the deleted rainbow triangle, ascending.
  std::vector<int> tuple;
  int color_loss = 0;  // colors lost by this deletion: c(before) - c(after)
};

struct ExtractionTrace {
  int n = 0;  // order of the host the run started from
  int m = 0;  // packing target the thresholds were computed against
  std::vector<PeelStep> steps;
  int final_k = 0;
  int residual_colors = 0;
};

enum class FailureReason { k_below_m, host_not_complete };

struct FailureReport {
  ExtractionTrace trace;
  FailureReason reason = FailureReason::k_below_m;
};

/**
 * Color-driven peeling of a complete edge-colored host. Round i (0-based)
 * first scans ordered tuples (v1..vN), N = 1,2,3 in lexicographic order, for
 * prefix saturation exceeding 3(m-i)+N, and deletes v1 of the first hit;
 * otherwise it deletes the first rainbow triangle (lexicographic) whose
 * saturated color degree is at most n-i-1. The run stops when neither rule
 * fires or when m rounds have been taken: rounds beyond m would drive the
 * thresholds negative and are never needed, since m rounds already certify
 * the packing. Each round's color loss is recorded and checked against the
 * ceiling n-i on the fly.
 */
ExtractionTrace run_peeling(const ColoredGraph& g, int m);

/**
 * Replays a trace backwards and materializes one rainbow triangle per round,
 * pairwise vertex-disjoint. A triangle round contributes the deleted
 * triangle itself. A vertex round fired on (v1..vN) is completed into a
 * triangle through v1: witness_edges with k = 3(m-i)+2 certifies enough
 * distinctly-colored edges at v1 avoiding the tuple tail that two endpoints
 * u, w (the least available pair) fall outside everything already packed,
 * and saturation of the edge colors by tuple prefixes forces color(u,w) to
 * differ from both. The pack is capped at m triangles. Requires
 * trace.final_k >= m; any internal contradiction throws std::logic_error,
 * since the trace guarantees the construction.
 */
TrianglePack reconstruct_pack(const ColoredGraph& g, const ExtractionTrace& trace, int m);

/**
 * run_peeling + reconstruct_pack on a complete host: either m vertex-
 * disjoint rainbow triangles or the trace explaining how the run fell
 * short. On hosts with c(g) > m*n - C(m+1,2) and n >= 9m+8 the failure
 * branch is unreachable: fewer than m rounds would cap c(g) under that
 * value, so the counting contradicts the stop.
 */
std::variant<TrianglePack, FailureReport> extract_proper_mk3(const ColoredGraph& g, int m);

struct AuditResult {
  bool ok = true;
  std::string detail;  // first violation, empty when ok
  explicit operator bool() const { return ok; }
};

/**
 * Independent replay of a trace against the host it claims to describe:
 * every firing condition is recomputed from scratch (definitional
 * saturation, no index), every color loss is recomputed and checked against
 * n-i, the losses must telescope to c(g) - residual_colors, and a run that
 * stopped short of m with n >= 9m+8 must leave a residual with no rainbow
 * triangle and at most n-k-1 colors.
 */
AuditResult audit_trace(const ColoredGraph& g, const ExtractionTrace& trace);

}  // namespace ecg
