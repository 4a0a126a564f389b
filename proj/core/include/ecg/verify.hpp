#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecg/bounds.hpp"
#include "ecg/colored_graph.hpp"
#include "ecg/rng.hpp"

namespace ecg {

struct HostSpec {
  int n = 0;
  bool complete = true;
  std::vector<std::pair<int, int>> edges;  // used when !complete; (u,v) with u<v, sorted
};

HostSpec complete_host(int n);
std::vector<std::pair<int, int>> host_edges(const HostSpec& host);

/**
 * Streams every coloring of the host's edge set, one per set partition of
 * the edges (colors are block indices), in restricted-growth-string order.
 * Colorings with fewer than min_colors distinct colors are skipped. The
 * cursor is an opaque resume token: seek() continues a previous stream.
 */
class ColoringEnumerator {
 public:
  explicit ColoringEnumerator(HostSpec host, int min_colors = 0);

  std::optional<ColoredGraph> next();
  std::vector<int> cursor() const;
  void seek(std::span<const int> cursor);
  long long emitted() const { return emitted_; }
  const std::vector<std::pair<int, int>>& edge_order() const { return edges_; }

 private:
  bool advance();
  int blocks() const;

  HostSpec host_;
  std::vector<std::pair<int, int>> edges_;
  int min_colors_ = 0;
  std::vector<int> rgs_;
  bool fresh_ = true;
  bool done_ = false;
  long long emitted_ = 0;
};

/** Exact Bell number; arguments above 25 overflow and throw. */
unsigned long long bell_number(int n);

struct EnumerationGuard {
  bool ok = false;
  std::string message;  // refusal text with a partition-count estimate
};

/**
 * Full enumeration is allowed for complete hosts up to n = 5 (Bell(10) =
 * 115975 colorings) and explicit hosts up to 12 edges. Anything larger is
 * refused with an estimate of what it would have cost.
 */
EnumerationGuard enumeration_guard(const HostSpec& host);

struct VerifyMode {
  bool exhaustive = true;
  long long trials = 0;
  uint64_t seed = 0;
};

struct Counterexample {
  ColoredGraph graph;
  long long instance = 0;  // partition index or trial index
};

struct Verdict {
  BoundQuery query;
  BoundThreshold threshold;
  bool in_stated_range = true;
  VerifyMode mode;
  long long instances_checked = 0;
  long long hypothesis_met = 0;
  long long vacuous = 0;  // trials whose hypothesis was unsatisfiable
  std::optional<Counterexample> counterexample;
  bool pass() const { return !counterexample.has_value(); }
};

/** The literal applicability window each bound statement carries. */
bool in_stated_range(const BoundQuery& q, bool host_complete);

/** Exact search for the bound's conclusion on g. */
bool bound_conclusion_holds(const ColoredGraph& g, const BoundQuery& q);

/**
 * Checks hypothesis => conclusion over every coloring of K_n. A coloring
 * that meets the threshold but lacks the conclusion is re-verified from its
 * own serialized bytes before it is reported. Deterministic for fixed
 * query; jobs only splits the work.
 */
Verdict exhaustive_verify(const BoundQuery& q, int jobs = 1);

/**
 * Seeded sampling at the hypothesis boundary: each trial colors the host
 * with exactly the least color count that meets the threshold, via uniform
 * surjection (rejection capped at 1000, then one forced edge per color).
 * conj14 trials also sample near-complete hosts by deleting a geometric
 * number of random edges; thm15 trials check the conclusion with the
 * constructive extractor and cross-check every tenth trial against the
 * exact packing search. Verdicts depend only on (query, trials, seed).
 */
Verdict random_verify(const BoundQuery& q, long long trials, uint64_t seed, int jobs = 1);

/** Coloring of the host with exactly `colors` distinct colors, uniform-ish. */
ColoredGraph sample_surjective_coloring(Rng& rng, const HostSpec& host, int colors);

/** K_n minus a geometric(1/2) number of random edges (possibly zero). */
HostSpec sample_near_complete_host(Rng& rng, int n);

/** Re-parse a counterexample from its serialized form and re-check it. */
bool counterexample_reverifies(const BoundQuery& q, const ColoredGraph& cx,
                               std::string* why = nullptr);

struct BoundCheckLine {
  BoundId id = BoundId::thm11;
  BoundThreshold threshold;
  long long target_value = 0;  // g's e+c or c, whichever the bound watches
  bool threshold_met = false;
  bool in_stated_range = false;
  std::optional<bool> conclusion_holds;  // searched only when threshold met
  bool violated = false;                 // met + in range + conclusion absent
};

struct RefutedConjectureNote {
  long long threshold = 0;
  bool in_stated_range = false;
  bool hypothesis_met = false;
  bool proper_mk3_found = false;
  bool refutation_reproduced = false;
};

struct BoundReport {
  int n = 0, m = 0, k = 0;
  long long e = 0, c = 0;
  bool complete_host = false;
  std::vector<BoundCheckLine> checks;
  RefutedConjectureNote refuted;
  std::vector<BoundId> violations;  // failing implications of proved bounds
};

/**
 * Evaluates every applicable implemented bound against one graph: which
 * hypotheses g meets, which conclusions hold, and whether any proved
 * implication fails on g (that would be a counterexample to a published
 * result and is listed under violations). Also reports the retired
 * m-triangles threshold C(n+1,2)+6m-6, whose failure on
 * build_main_construction(10,2) is expected and reproduces its refutation.
 * k = 0 skips the clique-order bounds.
 */
BoundReport check_graph(const ColoredGraph& g, int m, int k = 0);

}  // namespace ecg
