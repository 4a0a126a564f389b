// ecg: command line front end for the edge-colored-graph library.
//
// Subcommands: construct, bounds, find, saturation, extract, verify, check.
// Exit codes: 0 success / property holds, 2 counterexample or extraction
// failure, 1 crash, bad usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ecg/bounds.hpp"
#include "ecg/colored_graph.hpp"
#include "ecg/constructions.hpp"
#include "ecg/extraction.hpp"
#include "ecg/io.hpp"
#include "ecg/rainbow.hpp"
#include "ecg/saturation.hpp"
#include "ecg/verify.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
  int jobs = 0;  // 0: take ECG_JOBS, else 1
  bool deterministic = false;
};

int effective_jobs(const GlobalOpts& g) {
  if (g.jobs > 0) return g.jobs;
  if (const char* env = std::getenv("ECG_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void stamp(json& j, const GlobalOpts& g) {
  j["schema"] = 1;
  if (!g.deterministic) {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["generated_at"] = buf;
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

ecg::ColoredGraph load_graph(const std::string& path) {
  return ecg::io::from_ecg_text(ecg::io::read_file(path));
}

std::vector<int> parse_vertex_list(const std::string& s) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(std::stoi(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty vertex list");
  return out;
}

const char* target_name(ecg::BoundTarget t) {
  return t == ecg::BoundTarget::colors ? "colors" : "edges_plus_colors";
}

json threshold_json(const ecg::BoundThreshold& th) {
  return json{{"value", th.value}, {"strict", th.strict}, {"target", target_name(th.target)}};
}

json pack_json(const ecg::TrianglePack& pack) {
  json arr = json::array();
  for (const auto& t : pack.triangles) arr.push_back({t[0], t[1], t[2]});
  return arr;
}

json trace_json(const ecg::ExtractionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"kind", s.kind == ecg::StepKind::vertex ? "vertex" : "triangle"},
                     {"tuple", s.tuple},
                     {"color_loss", s.color_loss}});
  }
  return json{{"n", trace.n},
              {"m", trace.m},
              {"steps", steps},
              {"final_k", trace.final_k},
              {"residual_colors", trace.residual_colors}};
}

ecg::BoundQuery query_from(const std::string& id, int n, int m, int k) {
  auto parsed = ecg::bound_id_from_string(id);
  if (!parsed) throw std::invalid_argument("unknown bound id: " + id);
  return ecg::BoundQuery{*parsed, n, m, k};
}

int run_construct(const std::string& kind, int n, int m, const std::string& out) {
  ecg::ColoredGraph g = [&] {
    if (kind == "tn") return ecg::build_tn(n);
    if (kind == "main") return ecg::build_main_construction(n, m);
    if (kind == "lili") return ecg::build_lili_construction(n, m);
    if (kind == "join") return ecg::build_join_construction(n, m);
    throw std::invalid_argument("unknown construction kind: " + kind);
  }();
  std::string text = ecg::io::to_ecg_text(g);
  if (out.empty())
    std::cout << text;
  else
    ecg::io::write_file(out, text);
  return 0;
}

int run_bounds(const GlobalOpts& opts, const std::string& id, int n, int m, int k) {
  ecg::BoundQuery q = query_from(id, n, m, k);
  ecg::BoundThreshold th = ecg::bound_value(q);
  json j;
  stamp(j, opts);
  j["id"] = ecg::to_string(q.id);
  j["n"] = n;
  j["m"] = m;
  j["k"] = k;
  j["threshold"] = threshold_json(th);
  emit(j);
  return 0;
}

int run_find(const GlobalOpts& opts, const std::string& in, int clique_k,
             const std::vector<int>& pack_arg, bool max_pack) {
  ecg::ColoredGraph g = load_graph(in);
  ecg::SearchStats stats;
  json j;
  stamp(j, opts);
  j["in"] = in;
  if (clique_k > 0) {
    j["op"] = "rainbow_clique";
    j["k"] = clique_k;
    auto hit = ecg::find_rainbow_clique(g, clique_k, &stats);
    j["found"] = hit.has_value();
    if (hit) j["witness"] = *hit;
  } else if (!pack_arg.empty()) {
    int k = pack_arg[0], m = pack_arg[1];
    j["op"] = "disjoint_pack";
    j["k"] = k;
    j["m"] = m;
    auto pack = ecg::find_disjoint_rainbow_cliques(g, k, m, &stats);
    j["found"] = pack.has_value();
    if (pack) {
      json arr = json::array();
      for (const auto& c : pack->cliques) arr.push_back(c);
      j["witness"] = arr;
    }
  } else if (max_pack) {
    j["op"] = "max_triangle_pack";
    auto best = ecg::max_disjoint_rainbow_triangles(g, &stats);
    j["count"] = best.count;
    j["witness"] = pack_json(best.pack);
  } else {
    throw std::invalid_argument("find: pass --rainbow-clique, --pack or --max-pack");
  }
  j["nodes_explored"] = stats.nodes_explored;
  emit(j);
  return 0;
}

int run_saturation(const GlobalOpts& opts, const std::string& in, const std::string& set_arg,
                   const std::string& seq_arg, int witness_k) {
  ecg::ColoredGraph g = load_graph(in);
  json j;
  stamp(j, opts);
  j["in"] = in;
  if (!set_arg.empty()) {
    std::vector<int> a = parse_vertex_list(set_arg);
    j["set"] = a;
    j["saturated"] = ecg::saturated_colors(g, a);
    j["d_s"] = ecg::saturated_color_count(g, a);
    j["ideal"] = ecg::ideally_saturated_colors(g, a);
    j["phi"] = ecg::ideally_saturated_color_count(g, a);
    if (a.size() <= 4) {
      auto chk = ecg::subset_sum_check(g, a);
      j["subset_sum"] = {{"d_s", chk.d_s}, {"sum_phi", chk.sum_phi},
                         {"decomposes", chk.decomposes}};
    }
  } else if (!seq_arg.empty()) {
    std::vector<int> seq = parse_vertex_list(seq_arg);
    j["seq"] = seq;
    auto detail = ecg::phi_sequence_detail(g, seq);
    j["prefix_phi"] = detail.prefix_colors;
    j["phi_sequence"] = detail.total;
    if (witness_k > 0) {
      auto w = ecg::witness_edges(g, seq, witness_k);
      json edges = json::array();
      for (size_t i = 0; i < w.edges.size(); ++i)
        edges.push_back({{"u", w.edges[i].first},
                         {"v", w.edges[i].second},
                         {"color", w.colors[i]}});
      j["witness_edges"] = edges;
    }
  } else {
    throw std::invalid_argument("saturation: pass --set or --seq");
  }
  emit(j);
  return 0;
}

int run_extract(const GlobalOpts& opts, const std::string& in, int m,
                const std::string& trace_path) {
  ecg::ColoredGraph g = load_graph(in);
  auto result = ecg::extract_proper_mk3(g, m);
  json j;
  stamp(j, opts);
  j["in"] = in;
  j["m"] = m;

  const ecg::ExtractionTrace* trace = nullptr;
  ecg::ExtractionTrace own;
  int rc = 0;
  if (const auto* pack = std::get_if<ecg::TrianglePack>(&result)) {
    j["extracted"] = true;
    j["pack"] = pack_json(*pack);
    if (!trace_path.empty()) {
      own = ecg::run_peeling(g, m);
      trace = &own;
    }
  } else {
    const auto& fail = std::get<ecg::FailureReport>(result);
    j["extracted"] = false;
    j["reason"] = fail.reason == ecg::FailureReason::k_below_m ? "k_below_m"
                                                               : "host_not_complete";
    j["final_k"] = fail.trace.final_k;
    trace = &fail.trace;
    rc = 2;
  }
  if (trace && !trace_path.empty()) {
    json tj = trace_json(*trace);
    tj["schema"] = 1;
    auto audit = ecg::audit_trace(g, *trace);
    tj["audit_ok"] = audit.ok;
    if (!audit.ok) tj["audit_detail"] = audit.detail;
    ecg::io::write_file(trace_path, tj.dump(2) + "\n");
    j["trace"] = trace_path;
  }
  emit(j);
  return rc;
}

int run_verify(const GlobalOpts& opts, const std::string& id, int n, int m, int k,
               bool exhaustive, long long trials, uint64_t seed, const std::string& cx_path) {
  ecg::BoundQuery q = query_from(id, n, m, k);
  ecg::Verdict v = exhaustive ? ecg::exhaustive_verify(q, effective_jobs(opts))
                              : ecg::random_verify(q, trials, seed, effective_jobs(opts));
  json j;
  stamp(j, opts);
  j["bound"] = ecg::to_string(q.id);
  j["n"] = n;
  j["m"] = m;
  j["k"] = k;
  j["threshold"] = threshold_json(v.threshold);
  j["in_stated_range"] = v.in_stated_range;
  j["mode"] = v.mode.exhaustive
                  ? json{{"exhaustive", true}}
                  : json{{"exhaustive", false}, {"trials", v.mode.trials}, {"seed", v.mode.seed}};
  j["instances_checked"] = v.instances_checked;
  j["hypothesis_met"] = v.hypothesis_met;
  j["vacuous"] = v.vacuous;
  j["pass"] = v.pass();
  if (v.counterexample) {
    std::string why;
    bool ok = ecg::counterexample_reverifies(q, v.counterexample->graph, &why);
    json cx{{"instance", v.counterexample->instance}, {"reverified", ok}};
    if (!cx_path.empty()) {
      ecg::io::write_file(cx_path, ecg::io::to_ecg_text(v.counterexample->graph));
      cx["path"] = cx_path;
    }
    j["counterexample"] = cx;
  }
  emit(j);
  return v.pass() ? 0 : 2;
}

int run_check(const GlobalOpts& opts, const std::string& in, int m, int k) {
  ecg::ColoredGraph g = load_graph(in);
  ecg::BoundReport r = ecg::check_graph(g, m, k);
  json j;
  stamp(j, opts);
  j["in"] = in;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = r.k;
  j["edges"] = r.e;
  j["colors"] = r.c;
  j["complete_host"] = r.complete_host;
  json checks = json::array();
  bool conjecture_cx = false;
  for (const auto& line : r.checks) {
    json lj{{"id", ecg::to_string(line.id)},
            {"threshold", threshold_json(line.threshold)},
            {"target_value", line.target_value},
            {"threshold_met", line.threshold_met},
            {"in_stated_range", line.in_stated_range},
            {"violated", line.violated}};
    if (line.conclusion_holds) lj["conclusion_holds"] = *line.conclusion_holds;
    checks.push_back(lj);
    if (line.violated && line.id == ecg::BoundId::conj14) conjecture_cx = true;
  }
  j["checks"] = checks;
  j["retired_mk3_threshold"] = {{"value", r.refuted.threshold},
                                {"in_stated_range", r.refuted.in_stated_range},
                                {"hypothesis_met", r.refuted.hypothesis_met},
                                {"proper_mk3_found", r.refuted.proper_mk3_found},
                                {"refutation_reproduced", r.refuted.refutation_reproduced}};
  json viols = json::array();
  for (auto id : r.violations) viols.push_back(ecg::to_string(id));
  j["violations"] = viols;
  emit(j);
  return (!r.violations.empty() || conjecture_cx) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-colored graph constructions, bounds and verification"};
  app.require_subcommand(1);

  GlobalOpts opts;
  app.add_option("--jobs", opts.jobs, "worker threads (default: ECG_JOBS or 1)");
  app.add_flag("--deterministic", opts.deterministic, "omit timestamps from JSON output");

  auto* construct = app.add_subcommand("construct", "emit a named construction as ecg text");
  construct->fallthrough();
  std::string kind, out;
  int cn = 0, cm = 1;
  construct->add_option("--kind", kind, "tn | main | lili | join")->required();
  construct->add_option("--n", cn, "number of vertices")->required();
  construct->add_option("--m", cm, "packing parameter (ignored by tn)");
  construct->add_option("--out", out, "output path (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "evaluate a threshold formula");
  bounds->fallthrough();
  std::string bid;
  int bn = 0, bm = 0, bk = 0;
  bounds->add_option("--id", bid, "bound id, see README registry")->required();
  bounds->add_option("--n", bn, "host order")->required();
  bounds->add_option("--m", bm, "packing parameter");
  bounds->add_option("--k", bk, "clique order");

  auto* find = app.add_subcommand("find", "search a graph for rainbow structure");
  find->fallthrough();
  std::string fin;
  int fk = 0;
  std::vector<int> fpack;
  bool fmax = false;
  find->add_option("--in", fin, "ecg v1 input file")->required();
  find->add_option("--rainbow-clique", fk, "find one rainbow k-clique");
  find->add_option("--pack", fpack, "find m disjoint rainbow k-cliques: K M")->expected(2);
  find->add_flag("--max-pack", fmax, "maximum disjoint rainbow triangle pack");

  auto* saturation = app.add_subcommand("saturation", "saturated color degrees");
  saturation->fallthrough();
  std::string sin, sset, sseq;
  int switness = 0;
  saturation->add_option("--in", sin, "ecg v1 input file")->required();
  saturation->add_option("--set", sset, "vertex set, comma separated, 0-based");
  saturation->add_option("--seq", sseq, "ordered vertex sequence, comma separated");
  saturation->add_option("--witness", switness, "with --seq: certify k witness edges");

  auto* extract = app.add_subcommand("extract", "peel m disjoint rainbow triangles");
  extract->fallthrough();
  std::string ein, etrace;
  int em = 1;
  extract->add_option("--in", ein, "ecg v1 input file")->required();
  extract->add_option("--m", em, "number of disjoint rainbow triangles")->required();
  extract->add_option("--trace", etrace, "write the peeling trace as JSON");

  auto* verify = app.add_subcommand("verify", "test a bound over colorings of K_n");
  verify->fallthrough();
  std::string vid, vcx;
  int vn = 0, vm = 0, vk = 0;
  bool vex = false;
  long long vtrials = 0;
  uint64_t vseed = 0;
  verify->add_option("--bound", vid, "bound id")->required();
  verify->add_option("--n", vn, "host order")->required();
  verify->add_option("--m", vm, "packing parameter");
  verify->add_option("--k", vk, "clique order");
  verify->add_flag("--exhaustive", vex, "enumerate every coloring (guarded)");
  verify->add_option("--trials", vtrials, "number of seeded random trials");
  verify->add_option("--seed", vseed, "base seed for --trials");
  verify->add_option("--counterexample", vcx, "write a counterexample here if found");

  auto* check = app.add_subcommand("check", "evaluate every applicable bound on one graph");
  check->fallthrough();
  std::string kin;
  int km = 1, kk = 0;
  check->add_option("--in", kin, "ecg v1 input file")->required();
  check->add_option("--m", km, "packing parameter");
  check->add_option("--k", kk, "clique order (0 skips clique bounds)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*construct) return run_construct(kind, cn, cm, out);
    if (*bounds) return run_bounds(opts, bid, bn, bm, bk);
    if (*find) return run_find(opts, fin, fk, fpack, fmax);
    if (*saturation) return run_saturation(opts, sin, sset, sseq, switness);
    if (*extract) return run_extract(opts, ein, em, etrace);
    if (*verify) {
      if (vex == (vtrials > 0))
        throw std::invalid_argument("verify: pass exactly one of --exhaustive or --trials");
      return run_verify(opts, vid, vn, vm, vk, vex, vtrials, vseed, vcx);
    }
    if (*check) return run_check(opts, kin, km, kk);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
