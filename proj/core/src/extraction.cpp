#include "ecg/extraction.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "ecg/saturation.hpp"

namespace ecg {
namespace {

// First ordered tuple (v1..vN), N = 1,2,3, whose prefix saturation count
// exceeds 3(m-i)+N. Tuples are tried in lexicographic order within each N.
// The index answers phi for every set of size <= 3, so a round is O(n^3)
// lookups.
std::optional<std::vector<int>> scan_tuples(const ColoredGraph& g, const SaturationIndex& idx,
                                            int base) {
  std::vector<int> verts = g.vertices();
  for (int v1 : verts)
    if (idx.phi1(v1) > base + 1) return std::vector<int>{v1};
  for (int v1 : verts) {
    int s1 = idx.phi1(v1);
    for (int v2 : verts) {
      if (v2 == v1) continue;
      if (s1 + idx.phi2(v1, v2) > base + 2) return std::vector<int>{v1, v2};
    }
  }
  for (int v1 : verts) {
    int s1 = idx.phi1(v1);
    for (int v2 : verts) {
      if (v2 == v1) continue;
      int s2 = s1 + idx.phi2(v1, v2);
      for (int v3 : verts) {
        if (v3 == v1 || v3 == v2) continue;
        if (s2 + idx.phi3(v1, v2, v3) > base + 3) return std::vector<int>{v1, v2, v3};
      }
    }
  }
  return std::nullopt;
}

// First rainbow triangle (lexicographic) with saturated color degree at most
// the ceiling, or nullopt.
std::optional<Triangle> scan_triangles(const ColoredGraph& g, int ceiling) {
  for (const Triangle& t : enumerate_rainbow_triangles(g))
    if (saturated_color_count(g, t) <= ceiling) return t;
  return std::nullopt;
}

std::vector<ColoredGraph> replay(const ColoredGraph& g, const ExtractionTrace& trace) {
  std::vector<ColoredGraph> stages;
  stages.reserve(trace.steps.size() + 1);
  stages.push_back(g);
  for (const auto& step : trace.steps) {
    if (step.kind == StepKind::vertex)
      stages.push_back(stages.back().without(std::span<const int>(step.tuple.data(), 1)));
    else
      stages.push_back(stages.back().without(step.tuple));
  }
  return stages;
}

}  // namespace

ExtractionTrace run_peeling(const ColoredGraph& g, int m) {
  if (m < 1) throw std::invalid_argument("run_peeling: need m >= 1");
  if (!g.is_complete()) throw std::invalid_argument("run_peeling: host must be complete");
  ExtractionTrace trace;
  trace.n = g.order();
  trace.m = m;

  ColoredGraph cur = g;
  for (int i = 0; i < m; ++i) {
    SaturationIndex idx(cur);
    PeelStep step;
    if (auto tuple = scan_tuples(cur, idx, 3 * (m - i))) {
      step.kind = StepKind::vertex;
      step.tuple = std::move(*tuple);
    } else if (auto tri = scan_triangles(cur, trace.n - i - 1)) {
      step.kind = StepKind::triangle;
      step.tuple.assign(tri->begin(), tri->end());
    } else {
      break;
    }
    ColoredGraph next =
        step.kind == StepKind::vertex
            ? cur.without(std::span<const int>(step.tuple.data(), 1))
            : cur.without(step.tuple);
    step.color_loss = cur.color_count() - next.color_count();
    if (step.color_loss > trace.n - (i + 1))
      throw std::logic_error("run_peeling: color loss above ceiling");
    trace.steps.push_back(std::move(step));
    cur = std::move(next);
  }
  trace.final_k = static_cast<int>(trace.steps.size());
  trace.residual_colors = cur.color_count();
  return trace;
}

TrianglePack reconstruct_pack(const ColoredGraph& g, const ExtractionTrace& trace, int m) {
  if (m < 1) throw std::invalid_argument("reconstruct_pack: need m >= 1");
  if (trace.final_k < m)
    throw std::invalid_argument("reconstruct_pack: trace certifies fewer than m rounds");
  std::vector<ColoredGraph> stages = replay(g, trace);

  TrianglePack pack;
  Bitset packed(g.universe_size());
  auto take = [&](Triangle t) {
    std::sort(t.begin(), t.end());
    for (int v : t) {
      if (packed.test(v)) throw std::logic_error("reconstruct_pack: vertex packed twice");
      packed.set(v);
    }
    pack.triangles.push_back(t);
  };

  // walk rounds backwards; everything packed so far lives in the smaller
  // stage, so it cannot collide with vertices deleted at this round
  for (int i = trace.final_k; i >= 1 && static_cast<int>(pack.triangles.size()) < m; --i) {
    const PeelStep& step = trace.steps[static_cast<size_t>(i - 1)];
    const ColoredGraph& before = stages[static_cast<size_t>(i - 1)];
    if (step.kind == StepKind::triangle) {
      if (!before.is_rainbow_clique(step.tuple))
        throw std::logic_error("reconstruct_pack: recorded triangle is not rainbow");
      take({step.tuple[0], step.tuple[1], step.tuple[2]});
      continue;
    }
    // complete v1 into a triangle using two certified edges whose far ends
    // are still free
    WitnessEdges we = witness_edges(before, step.tuple, 3 * (m - i) + 2);
    int v1 = step.tuple[0];
    std::vector<int> ends;
    for (const auto& [x, w] : we.edges)
      if (!packed.test(w)) ends.push_back(w);
    std::sort(ends.begin(), ends.end());
    if (ends.size() < 2) throw std::logic_error("reconstruct_pack: fewer than two free endpoints");
    int u = ends[0], w = ends[1];
    Triangle t{v1, u, w};
    if (!before.is_rainbow_clique(t))
      throw std::logic_error("reconstruct_pack: completed triangle is not rainbow");
    take(t);
  }

  if (static_cast<int>(pack.triangles.size()) != m)
    throw std::logic_error("reconstruct_pack: pack came up short");
  std::sort(pack.triangles.begin(), pack.triangles.end());
  if (!validate_triangle_pack(g, pack))
    throw std::logic_error("reconstruct_pack: pack fails validation");
  return pack;
}

std::variant<TrianglePack, FailureReport> extract_proper_mk3(const ColoredGraph& g, int m) {
  if (m < 1) throw std::invalid_argument("extract_proper_mk3: need m >= 1");
  if (!g.is_complete()) {
    FailureReport fail;
    fail.reason = FailureReason::host_not_complete;
    fail.trace.n = g.order();
    fail.trace.m = m;
    fail.trace.residual_colors = g.color_count();
    return fail;
  }
  ExtractionTrace trace = run_peeling(g, m);
  if (trace.final_k >= m) return reconstruct_pack(g, trace, m);
  return FailureReport{std::move(trace), FailureReason::k_below_m};
}

AuditResult audit_trace(const ColoredGraph& g, const ExtractionTrace& trace) {
  auto fail = [](std::string msg) { return AuditResult{false, std::move(msg)}; };
  if (trace.n != g.order()) return fail("trace host order does not match graph");
  if (trace.m < 1) return fail("trace has m < 1");
  if (trace.final_k != static_cast<int>(trace.steps.size()))
    return fail("final_k does not match the number of rounds");
  if (trace.final_k > trace.m) return fail("more rounds than the round cap m");
  if (!g.is_complete()) return fail("host is not complete");

  std::vector<ColoredGraph> stages;
  try {
    stages = replay(g, trace);
  } catch (const std::exception& e) {
    return fail(std::string("trace does not replay: ") + e.what());
  }

  long long lost = 0;
  for (int i = 1; i <= trace.final_k; ++i) {
    const PeelStep& step = trace.steps[static_cast<size_t>(i - 1)];
    const ColoredGraph& before = stages[static_cast<size_t>(i - 1)];
    std::string at = "round " + std::to_string(i) + ": ";
    if (step.kind == StepKind::vertex) {
      if (step.tuple.empty() || step.tuple.size() > 3)
        return fail(at + "vertex round needs a tuple of size 1..3");
      int n_seq = static_cast<int>(step.tuple.size());
      int phi;
      try {
        phi = phi_sequence(before, step.tuple);
      } catch (const std::exception& e) {
        return fail(at + e.what());
      }
      if (phi <= 3 * (trace.m - (i - 1)) + n_seq)
        return fail(at + "prefix saturation " + std::to_string(phi) +
                    " does not clear the firing threshold");
    } else {
      if (step.tuple.size() != 3) return fail(at + "triangle round needs three vertices");
      if (!before.is_rainbow_clique(step.tuple))
        return fail(at + "deleted triangle is not rainbow");
      int ds = saturated_color_count(before, step.tuple);
      if (ds > trace.n - (i - 1) - 1)
        return fail(at + "triangle saturated degree " + std::to_string(ds) +
                    " above its ceiling");
    }
    int loss = before.color_count() - stages[static_cast<size_t>(i)].color_count();
    if (loss != step.color_loss)
      return fail(at + "recorded color loss " + std::to_string(step.color_loss) +
                  " but replay lost " + std::to_string(loss));
    if (loss > trace.n - i)
      return fail(at + "color loss " + std::to_string(loss) + " above ceiling " +
                  std::to_string(trace.n - i));
    lost += loss;
  }

  const ColoredGraph& residual = stages.back();
  if (residual.color_count() != trace.residual_colors)
    return fail("residual colors " + std::to_string(residual.color_count()) +
                " do not match the trace");
  if (g.color_count() != lost + residual.color_count())
    return fail("color losses do not telescope to c(host) - c(residual)");

  if (trace.final_k < trace.m && trace.n >= 9 * trace.m + 8) {
    if (!enumerate_rainbow_triangles(residual).empty())
      return fail("short run left a rainbow triangle in the residual");
    if (residual.color_count() > trace.n - trace.final_k - 1)
      return fail("short run left more than n-k-1 colors in the residual");
  }
  return {};
}

}  // namespace ecg
