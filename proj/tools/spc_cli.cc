// spc: command-line front end for the solvers, merge procedures, verifiers
// and property campaigns.
//
// Exit codes: 0 solved/verified, 1 infeasible/falsified, 2 usage or format
// error, 3 budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spc/campaign.h"
#include "spc/counterexamples.h"
#include "spc/dot.h"
#include "spc/error.h"
#include "spc/merge.h"
#include "spc/reduction.h"
#include "spc/roundtrip.h"
#include "spc/spc.h"
#include "spc/supplier.h"
#include "spc/text_format.h"

namespace {

using json = nlohmann::ordered_json;
using namespace spc;

enum Exit { kOk = 0, kFalsified = 1, kUsage = 2, kBudget = 3 };

// What every subcommand reports. Text mode prints "key: value" lines, json
// mode one object with status/paths/congestion/trace/case_log plus extras.
struct Report {
  std::string status;
  std::optional<PathCollection> paths;
  std::vector<TraceEvent> trace;
  std::vector<std::string> case_log;
  json extra = json::object();
  std::string body;  // free text, text mode only
};

json event_json(const TraceEvent& e) {
  if (const auto* s = std::get_if<SwapRecord>(&e)) {
    return {{"op", "swap"}, {"p", s->p}, {"q", s->q}, {"a", s->a}, {"b", s->b}};
  }
  return {{"op", "add"}, {"nodes", std::get<AddRecord>(e).path.nodes()}};
}

void emit(const Report& r, const std::string& format) {
  if (format == "json") {
    json out;
    out["status"] = r.status;
    out["paths"] = json::array();
    out["congestion"] = json::object();
    if (r.paths) {
      for (const Path& p : r.paths->paths()) out["paths"].push_back(p.nodes());
      const CongestionMap cong = congestion_map(*r.paths);
      for (const auto& [v, n] : cong.counts()) {
        out["congestion"][std::to_string(v)] = n;
      }
    }
    out["trace"] = json::array();
    for (const TraceEvent& e : r.trace) out["trace"].push_back(event_json(e));
    out["case_log"] = r.case_log;
    for (const auto& [k, v] : r.extra.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "status: " << r.status << "\n";
  for (const auto& [k, v] : r.extra.items()) {
    std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  if (r.paths) {
    std::cout << "paths:\n" << render_paths(r.paths->paths());
    std::cout << "congestion:";
    const CongestionMap cong = congestion_map(*r.paths);
    for (const auto& [v, n] : cong.counts()) std::cout << " " << v << ":" << n;
    std::cout << "\n";
  }
  if (!r.trace.empty()) std::cout << "trace:\n" << format_trace(r.trace);
  for (const std::string& line : r.case_log) std::cout << "case " << line << "\n";
  std::cout << r.body;
}

int status_exit(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSolved: return kOk;
    case SolveStatus::kInfeasible: return kFalsified;
    case SolveStatus::kBudgetExceeded: return kBudget;
  }
  return kFalsified;
}

bool looks_like_instance(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::istringstream words(line);
    std::string first;
    words >> first;
    if (first == "pairs" || first == "graph") return true;
  }
  return false;
}

std::string dir_of(const std::string& file) {
  auto parent = std::filesystem::path(file).parent_path();
  return parent.empty() ? "." : parent.string();
}

SpcInstance load_instance(const std::string& file) {
  return parse_instance(read_file(file), dir_of(file));
}

// A bare graph file or an instance file (its graph is used).
Graph load_graph(const std::string& file) {
  std::string text = read_file(file);
  if (looks_like_instance(text)) return parse_instance(text, dir_of(file)).graph;
  return parse_graph(text);
}

struct Options {
  std::string format = "text";
  std::uint64_t budget = 50'000'000;
  std::uint64_t seed = 42;
  int trials = -1;
  std::string backend = "brute";
};

SearchLimits limits(const Options& o) {
  SearchLimits lim;
  lim.expansion_budget = o.budget;
  return lim;
}

int emit_outcome(const SpcOutcome& out, Report r, const Options& o) {
  r.status = solve_status_name(out.status);
  r.extra["expansions"] = out.expansions;
  if (out.solution) r.paths = out.solution->paths;
  emit(r, o.format);
  return status_exit(out.status);
}

int cmd_solve_spc(const std::string& file, std::size_t path_cap, const Options& o) {
  SpcInstance inst = load_instance(file);
  DistanceOracle oracle = all_pairs_distances(inst.graph);
  SearchLimits lim = limits(o);
  lim.path_cap = path_cap;
  return emit_outcome(brute_force_spc(inst, oracle, lim), {}, o);
}

int cmd_solve_dsp(const std::string& file, const Options& o) {
  SpcInstance inst = load_instance(file);
  DistanceOracle oracle = all_pairs_distances(inst.graph);
  DspBackend backend = o.backend == "dag-dp" ? DspBackend::kDagDp : DspBackend::kBrute;
  ReductionOutcome red = spc_via_dsp_reduction(inst, oracle, backend, limits(o));
  Report r;
  r.extra["backend"] = o.backend;
  r.extra["subset_size"] = red.subset_size;
  r.extra["direct"] = red.direct;
  r.extra["subsets_tried"] = red.subsets_tried;
  return emit_outcome(red.outcome, r, o);
}

int cmd_merge(const std::string& file, const std::string& paths_file, const std::string& W_text,
              const Options& o) {
  SpcInstance inst = load_instance(file);
  DistanceOracle oracle = all_pairs_distances(inst.graph);
  PathCollection sol;
  if (!paths_file.empty()) {
    sol = PathCollection(parse_paths(read_file(paths_file)));
    ValidationReport rep = validate_solution(inst, oracle, SpcSolution{sol});
    if (!rep.ok()) throw Error(ErrorCode::kInvalidArgument, rep.violations.front().message);
  } else {
    SpcOutcome out = brute_force_spc(inst, oracle, limits(o));
    if (out.status != SolveStatus::kSolved) {
      Report r;
      r.body = "no solution to merge\n";
      return emit_outcome(out, r, o);
    }
    sol = out.solution->paths;
  }
  std::vector<NodeId> W = W_text.empty() ? max_congestion_nodes(sol, inst.c) : parse_node_list(W_text);
  if (W.empty()) throw Error(ErrorCode::kInvalidArgument, "no max-congestion nodes to merge");
  CollectionSupplier supplier;
  std::optional<MergeResult> res;
  if (!inst.graph.directed()) {
    res = merge_undirected(inst.graph, oracle, sol, W, supplier);
  } else if (topological_order(inst.graph)) {
    res = merge_dag(inst.graph, oracle, sol, W, supplier);
  } else {
    throw Error(ErrorCode::kUnsupportedGraph, "directed graph with cycles: use roundtrip");
  }
  Report r;
  r.status = "merged";
  r.paths = res->paths;
  r.trace = res->trace.events;
  r.extra["W"] = W;
  r.extra["index"] = res->index;
  emit(r, o.format);
  return kOk;
}

int cmd_roundtrip(const std::string& file, const std::string& paths_file, const std::string& W_text,
                  std::string mode, std::size_t query_limit, const Options& o) {
  Graph graph = load_graph(file);
  DistanceOracle oracle = all_pairs_distances(graph);
  PathCollection coll;
  if (!paths_file.empty()) coll = PathCollection(parse_paths(read_file(paths_file)));
  std::vector<NodeId> W;
  if (W_text.empty()) {
    for (NodeId v = 0; v < graph.node_count(); ++v) W.push_back(v);
  } else {
    W = parse_node_list(W_text);
  }
  if (mode.empty()) mode = paths_file.empty() ? "theorem" : "collection";
  std::unique_ptr<Supplier> supplier;
  if (mode == "theorem") {
    supplier = std::make_unique<TheoremSupplier>(graph, oracle);
  } else {
    supplier = std::make_unique<CollectionSupplier>();
  }
  supplier->set_query_limit(query_limit);
  RoundtripResult res;
  try {
    res = roundtrip_cover(graph, oracle, coll, W, *supplier);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSupplierExhausted) throw;
    Report r;
    r.status = "precondition-fails";
    r.extra["error"] = e.what();
    emit(r, o.format);
    return kFalsified;
  }
  const bool two = res.outcome.kind == CoverOutcome::Kind::kTwoPaths;
  Report r;
  r.status = two ? "two-paths" : "single-path";
  r.paths = res.paths;
  r.trace = res.trace.events;
  r.case_log = res.case_log;
  r.extra["mode"] = mode;
  r.extra["first"] = res.outcome.first;
  if (two) {
    r.extra["second"] = res.outcome.second;
    r.extra["exact_boundary"] = res.outcome.exact_boundary;
  }
  r.extra["iterations"] = res.iterations;
  r.extra["queries"] = supplier->queries();
  const std::string why = check_cover(res.paths, res.outcome, W);
  r.extra["cover_check"] = why.empty() ? "ok" : why;
  emit(r, o.format);
  return why.empty() ? kOk : kFalsified;
}

int report_counterexample(const CounterexampleReport& rep, bool verified, const Options& o) {
  Report r;
  r.status = verified ? "verified" : "falsified";
  if (o.format == "json") {
    r.extra["name"] = rep.name;
    r.extra["nodes"] = rep.node_count;
    if (rep.precondition_holds) {
      r.extra["precondition_holds"] = *rep.precondition_holds;
      r.extra["precondition_subsets"] = rep.precondition_subsets;
    }
    r.extra["single_cover_exists"] = rep.single_cover_exists;
    r.extra["two_path_cover_exists"] = rep.two_path_cover_exists;
    if (rep.two_path_cover) {
      r.extra["two_path_cover"] = {rep.two_path_cover->first.nodes(),
                                   rep.two_path_cover->second.nodes()};
    }
    if (rep.unique_solution) r.extra["unique_solution"] = *rep.unique_solution;
    if (rep.solution_valid) r.extra["solution_valid"] = *rep.solution_valid;
    if (rep.solver_agrees) r.extra["solver_agrees"] = *rep.solver_agrees;
    if (rep.congestion_exact) r.extra["congestion_exact"] = *rep.congestion_exact;
    if (!rep.max_congestion_nodes.empty()) r.extra["max_congestion_nodes"] = rep.max_congestion_nodes;
  } else {
    r.body = render_report(rep);
  }
  emit(r, o.format);
  return verified ? kOk : kFalsified;
}

int cmd_cycle(int n, Weight a, int set_size, const Options& o) {
  CounterexampleReport rep = verify_bidirectional_cycle(n, a, set_size);
  const bool ok = rep.precondition_holds.value_or(false) && !rep.single_cover_exists &&
                  rep.two_path_cover_exists;
  return report_counterexample(rep, ok, o);
}

int cmd_appendix_b(int n, const Options& o) {
  CounterexampleReport rep = verify_appendixB(build_appendixB_instance(n));
  const bool ok = rep.unique_solution.value_or(false) && rep.solution_valid.value_or(false) &&
                  rep.solver_agrees.value_or(false) && rep.congestion_exact.value_or(false) &&
                  !rep.single_cover_exists && rep.two_path_cover_exists;
  return report_counterexample(rep, ok, o);
}

int cmd_verify(const std::string& kind_name, int trial, int threads, int max_nodes,
               const Options& o) {
  auto kind = parse_campaign_kind(kind_name);
  if (!kind) throw Error(ErrorCode::kInvalidArgument, "unknown campaign '" + kind_name + "'");
  CampaignConfig cfg = default_campaign(*kind);
  cfg.seed = o.seed;
  if (o.trials >= 0) cfg.trials = o.trials;
  if (max_nodes > 0) cfg.max_nodes = max_nodes;
  cfg.min_nodes = std::min(cfg.min_nodes, cfg.max_nodes);
  cfg.threads = threads;
  cfg.budget = std::min<std::uint64_t>(o.budget, cfg.budget);
  Report r;
  if (trial >= 0) {
    TrialVerdict v = run_trial(cfg, static_cast<std::size_t>(trial));
    r.status = v.pass ? "pass" : "fail";
    r.extra["campaign"] = campaign_name(cfg.kind);
    r.extra["trial"] = v.index;
    r.extra["trial_seed"] = v.seed;
    r.extra["detail"] = v.detail;
    if (o.format == "json") {
      r.extra["instance"] = v.instance;
      r.extra["stats"] = v.stats;
    } else {
      r.body = v.instance;
    }
    emit(r, o.format);
    return v.pass ? kOk : kFalsified;
  }
  CampaignResult res = run_campaign(cfg);
  r.status = res.failures() == 0 ? "verified" : "falsified";
  if (o.format == "json") {
    r.extra["campaign"] = campaign_name(cfg.kind);
    r.extra["seed"] = cfg.seed;
    r.extra["trials"] = res.verdicts.size();
    r.extra["passed"] = res.passes();
    r.extra["failed"] = res.failures();
    r.extra["vacuous"] = res.vacuous();
    r.extra["stats"] = res.stats();
    if (const TrialVerdict* f = res.first_failure()) {
      r.extra["first_failure"] = {{"trial", f->index}, {"seed", f->seed},
                                  {"detail", f->detail}, {"instance", f->instance}};
    }
  } else {
    r.body = render_campaign(res);
  }
  emit(r, o.format);
  return res.failures() == 0 ? kOk : kFalsified;
}

int cmd_export_dot(const std::string& file, const std::string& paths_file,
                   const std::string& trace_file, const std::string& W_text,
                   const std::string& out_file) {
  Graph graph = load_graph(file);
  PathCollection coll;
  if (!paths_file.empty()) coll = PathCollection(parse_paths(read_file(paths_file)), !graph.directed());
  if (!trace_file.empty()) coll = replay(coll, parse_trace(read_file(trace_file)));
  std::vector<NodeId> W = W_text.empty() ? std::vector<NodeId>{} : parse_node_list(W_text);
  const std::string dot = export_dot(graph, coll, W);
  if (out_file.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(out_file);
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + out_file);
    out << dot;
  }
  return kOk;
}

int cmd_replay(const std::string& file, const std::string& paths_file,
               const std::string& trace_file, const Options& o) {
  Graph graph = load_graph(file);
  DistanceOracle oracle = all_pairs_distances(graph);
  PathCollection coll(parse_paths(read_file(paths_file)), !graph.directed());
  std::vector<TraceEvent> events = parse_trace(read_file(trace_file));
  PathCollection out = replay(coll, events);
  Report r;
  r.paths = out;
  r.trace = events;
  // Swaps keep congestion; adds change it, so only swap-only traces are held to it.
  bool adds = false;
  for (const TraceEvent& e : events) adds = adds || std::holds_alternative<AddRecord>(e);
  bool ok = adds || congestion_map(out) == congestion_map(coll);
  for (const Path& p : out.paths()) ok = ok && validate_path(graph, oracle, p);
  r.status = ok ? "replayed" : "invalid";
  emit(r, o.format);
  return ok ? kOk : kFalsified;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kUnsupportedGraph:
    case ErrorCode::kUnreachable:
      return kUsage;
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kCapExceeded:
      return kBudget;
    default:
      return kFalsified;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest paths with congestion: solvers, merges and verifiers"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--budget", o.budget, "Search budget (paths tried)")->capture_default_str();
  app.add_option("--seed", o.seed, "Campaign seed")->capture_default_str();
  app.add_option("--trials", o.trials, "Campaign trial count (default: campaign's own)");
  app.add_option("--dsp-backend", o.backend, "k-DSP back-end for solve-dsp")
      ->check(CLI::IsMember({"brute", "dag-dp"}))
      ->capture_default_str();
  app.fallthrough();

  std::string file, paths_file, trace_file, W_text, mode, out_file, kind;
  std::size_t path_cap = 1'000'000, query_limit = 0;
  int trial = -1, threads = 0, max_nodes = 0, cycle_n = 16, appendix_n = 8, set_size = 11;
  Weight cycle_a = 11;

  auto* solve_spc = app.add_subcommand("solve-spc", "Exhaustive (k,c)-SPC search");
  solve_spc->add_option("instance", file, "Instance file")->required();
  solve_spc->add_option("--path-cap", path_cap, "Shortest paths enumerated per pair");

  auto* solve_dsp = app.add_subcommand("solve-dsp", "(k,c)-SPC through the k-DSP reduction");
  solve_dsp->add_option("instance", file, "Instance file")->required();

  auto* merge = app.add_subcommand("merge", "Merge max-congestion nodes onto one path");
  merge->add_option("instance", file, "Instance file")->required();
  merge->add_option("--paths", paths_file, "Solution paths (default: solve first)");
  merge->add_option("--W", W_text, "Target nodes (default: max-congestion nodes)");

  auto* roundtrip = app.add_subcommand("roundtrip", "Directed one- or two-path cover of W");
  roundtrip->add_option("graph", file, "Graph or instance file")->required();
  roundtrip->add_option("--paths", paths_file, "Starting collection");
  roundtrip->add_option("--W", W_text, "Target nodes (default: all)");
  roundtrip->add_option("--mode", mode, "Path supplier")
      ->check(CLI::IsMember({"theorem", "collection"}));
  roundtrip->add_option("--query-limit", query_limit, "Supplier queries allowed (0: no limit)");

  auto* counter = app.add_subcommand("counterexample", "Check an explicit counterexample");
  counter->require_subcommand(1);
  auto* cycle = counter->add_subcommand("cycle", "Bidirectional cycle B(n,a)");
  cycle->add_option("--n", cycle_n)->capture_default_str();
  cycle->add_option("--a", cycle_a)->capture_default_str();
  cycle->add_option("--set-size", set_size)->capture_default_str();
  auto* appendix = counter->add_subcommand("appendix-b", "Unit n-cycle SPC instance");
  appendix->add_option("--n", appendix_n)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a randomized property campaign");
  verify->add_option("campaign", kind,
                     "dag|undirected|directed|segments|cycle-lemma|reduction|exclusivity|swaps|"
                     "blowup|dag-dsp")
      ->required();
  verify->add_option("--trial", trial, "Run only this trial (reproduction)");
  verify->add_option("--threads", threads, "Worker threads (0: hardware)");
  verify->add_option("--max-nodes", max_nodes, "Override the node bound");

  auto* dot = app.add_subcommand("export-dot", "Graphviz export of a graph and paths");
  dot->add_option("graph", file, "Graph or instance file")->required();
  dot->add_option("--paths", paths_file, "Paths to draw");
  dot->add_option("--trace", trace_file, "Swap trace applied to the paths first");
  dot->add_option("--W", W_text, "Nodes to double-circle");
  dot->add_option("-o,--output", out_file, "Output file (default: stdout)");

  auto* rep = app.add_subcommand("replay", "Apply a swap trace to a path collection");
  rep->add_option("graph", file, "Graph or instance file")->required();
  rep->add_option("--paths", paths_file, "Starting paths")->required();
  rep->add_option("--trace", trace_file, "Trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_spc) return cmd_solve_spc(file, path_cap, o);
    if (*solve_dsp) return cmd_solve_dsp(file, o);
    if (*merge) return cmd_merge(file, paths_file, W_text, o);
    if (*roundtrip) return cmd_roundtrip(file, paths_file, W_text, mode, query_limit, o);
    if (*cycle) return cmd_cycle(cycle_n, cycle_a, set_size, o);
    if (*appendix) return cmd_appendix_b(appendix_n, o);
    if (*verify) return cmd_verify(kind, trial, threads, max_nodes, o);
    if (*dot) return cmd_export_dot(file, paths_file, trace_file, W_text, out_file);
    if (*rep) return cmd_replay(file, paths_file, trace_file, o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  }
  return kUsage;
}
