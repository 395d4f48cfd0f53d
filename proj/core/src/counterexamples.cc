#include "spc/counterexamples.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "spc/collection.h"
#include "spc/error.h"

namespace spc {

Graph build_bidirectional_cycle(int n, Weight a) {
  if (n < 3 || a < 1) throw Error(ErrorCode::kInvalidArgument, "need n >= 3 and a >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n, 1});
    edges.push_back({(i + 1) % n, i, a});
  }
  return Graph(true, n, std::move(edges));
}

SpcInstance build_appendixB_instance(int n) {
  if (n < 8 || n % 4 != 0) throw Error(ErrorCode::kInvalidArgument, "need n >= 8 divisible by 4");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});
  SpcInstance inst{Graph(true, n, std::move(edges)), {}, 3 * n / 4 + 1};
  for (int i = 0; i < n; ++i) inst.pairs.push_back({i, (i + 3 * n / 4) % n});
  return inst;
}

namespace {

std::vector<NodeId> unique_sorted(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

PreconditionResult verify_local_precondition(const DistanceOracle& oracle, int set_size,
                                             std::vector<NodeId> pool, std::size_t subset_cap) {
  if (set_size < 1) throw Error(ErrorCode::kInvalidArgument, "set size must be positive");
  pool = unique_sorted(std::move(pool));
  PreconditionResult result;
  if (pool.empty()) return result;
  const std::size_t m = std::min<std::size_t>(set_size, pool.size());
  for_each_subset(pool, m, [&](const std::vector<NodeId>& subset) {
    if (++result.subsets_checked > subset_cap) {
      throw Error(ErrorCode::kCapExceeded, "more than " + std::to_string(subset_cap) + " subsets");
    }
    bool ok = for_each_shortest_path_ordering(oracle, subset,
                                              [](const std::vector<NodeId>&) { return true; });
    if (ok) return false;
    result.holds = false;
    result.failing_subset = subset;
    return true;
  });
  return result;
}

SingleCoverResult verify_no_single_cover(const Graph& graph, const DistanceOracle& oracle,
                                         std::vector<NodeId> W, std::size_t path_cap) {
  W = unique_sorted(std::move(W));
  if (W.empty()) throw Error(ErrorCode::kInvalidArgument, "W is empty");
  SingleCoverResult result;
  std::size_t seen = 0;
  for (NodeId s = 0; s < graph.node_count(); ++s) {
    for (NodeId t = 0; t < graph.node_count(); ++t) {
      if (!oracle.reachable(s, t)) continue;
      PathEnumeration e = enumerate_shortest_paths(graph, oracle, s, t, path_cap - seen + 1);
      seen += e.paths.size();
      if (e.overflow || seen > path_cap) {
        throw Error(ErrorCode::kCapExceeded, "more than " + std::to_string(path_cap) + " paths");
      }
      for (const Path& p : e.paths) {
        if (p.contains_all(W)) {
          result.none = false;
          result.witness = p;
          return result;
        }
      }
    }
  }
  return result;
}

std::optional<std::pair<Path, Path>> find_roundtrip_cover(const Graph& graph,
                                                          const DistanceOracle& oracle,
                                                          std::vector<NodeId> W,
                                                          std::size_t path_cap) {
  W = unique_sorted(std::move(W));
  const int n = graph.node_count();
  std::size_t seen = 0;
  auto enumerate = [&](NodeId s, NodeId t) {
    PathEnumeration e = enumerate_shortest_paths(graph, oracle, s, t, path_cap - seen + 1);
    seen += e.paths.size();
    if (e.overflow || seen > path_cap) {
      throw Error(ErrorCode::kCapExceeded, "more than " + std::to_string(path_cap) + " paths");
    }
    return std::move(e.paths);
  };
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = 0; t < n; ++t) {
      if (!oracle.reachable(s, t) || !oracle.reachable(t, s)) continue;
      std::vector<Path> there = enumerate(s, t);
      std::vector<Path> back = enumerate(t, s);
      for (const Path& p : there) {
        for (const Path& q : back) {
          bool covers = std::all_of(W.begin(), W.end(),
                                    [&](NodeId v) { return p.contains(v) || q.contains(v); });
          if (covers) return std::make_pair(p, q);
        }
      }
    }
  }
  return std::nullopt;
}

CounterexampleReport verify_bidirectional_cycle(int n, Weight a, int set_size) {
  Graph g = build_bidirectional_cycle(n, a);
  DistanceOracle oracle = all_pairs_distances(g);
  std::vector<NodeId> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  CounterexampleReport report;
  report.name = "bidirectional-cycle n=" + std::to_string(n) + " a=" + std::to_string(a);
  report.node_count = n;
  PreconditionResult pre = verify_local_precondition(oracle, set_size, all);
  report.precondition_holds = pre.holds;
  report.precondition_failure = pre.failing_subset;
  report.precondition_subsets = pre.subsets_checked;
  SingleCoverResult single = verify_no_single_cover(g, oracle, all);
  report.single_cover_exists = !single.none;
  report.single_cover = single.witness;
  report.two_path_cover = find_roundtrip_cover(g, oracle, all);
  report.two_path_cover_exists = report.two_path_cover.has_value();
  return report;
}

CounterexampleReport verify_appendixB(const SpcInstance& inst) {
  DistanceOracle oracle = all_pairs_distances(inst.graph);
  CounterexampleReport report;
  report.name = "appendix-b n=" + std::to_string(inst.graph.node_count()) +
                " c=" + std::to_string(inst.c);
  report.node_count = inst.graph.node_count();

  bool unique = true;
  std::vector<Path> assembled;
  for (const TerminalPair& pr : inst.pairs) {
    PathEnumeration e = enumerate_shortest_paths(inst.graph, oracle, pr.source, pr.target, 2);
    unique = unique && e.paths.size() == 1;
    assembled.push_back(e.paths.front());
  }
  report.unique_solution = unique;
  SpcSolution sol{PathCollection(assembled)};
  report.solution_valid = validate_solution(inst, oracle, sol).ok();

  SpcOutcome solved = brute_force_spc(inst, oracle);
  report.solver_agrees = solved.status == SolveStatus::kSolved && solved.solution->paths == sol.paths;

  CongestionMap load = congestion_map(sol.paths);
  bool exact = true;
  for (NodeId v = 0; v < inst.graph.node_count(); ++v) exact = exact && load.count(v) == inst.c;
  report.congestion_exact = exact;
  for (NodeId v = 0; v < inst.graph.node_count(); ++v) {
    if (load.count(v) == inst.c) report.max_congestion_nodes.push_back(v);
  }

  const auto& W = report.max_congestion_nodes;
  for (const Path& p : assembled) {
    if (p.contains_all(W)) {
      report.single_cover_exists = true;
      report.single_cover = p;
      break;
    }
  }
  for (std::size_t i = 0; i < assembled.size() && !report.two_path_cover_exists; ++i) {
    for (std::size_t j = i + 1; j < assembled.size(); ++j) {
      bool covers = std::all_of(W.begin(), W.end(), [&](NodeId v) {
        return assembled[i].contains(v) || assembled[j].contains(v);
      });
      if (covers) {
        report.two_path_cover_exists = true;
        report.two_path_cover = std::make_pair(assembled[i], assembled[j]);
        break;
      }
    }
  }
  return report;
}

namespace {

std::string nodes_text(const std::vector<NodeId>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  out << "]";
  return out.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_report(const CounterexampleReport& r) {
  std::ostringstream out;
  out << "name: " << r.name << "\n";
  out << "nodes: " << r.node_count << "\n";
  if (r.precondition_holds) {
    out << "precondition_holds: " << yes_no(*r.precondition_holds) << "\n";
    out << "precondition_subsets: " << r.precondition_subsets << "\n";
    if (!r.precondition_failure.empty()) {
      out << "precondition_failure: " << nodes_text(r.precondition_failure) << "\n";
    }
  }
  if (r.unique_solution) out << "unique_solution: " << yes_no(*r.unique_solution) << "\n";
  if (r.solution_valid) out << "solution_valid: " << yes_no(*r.solution_valid) << "\n";
  if (r.solver_agrees) out << "solver_agrees: " << yes_no(*r.solver_agrees) << "\n";
  if (r.congestion_exact) out << "congestion_exact: " << yes_no(*r.congestion_exact) << "\n";
  if (r.unique_solution) out << "max_congestion_nodes: " << nodes_text(r.max_congestion_nodes) << "\n";
  out << "single_cover_exists: " << yes_no(r.single_cover_exists) << "\n";
  if (r.single_cover) out << "single_cover: " << nodes_text(r.single_cover->nodes()) << "\n";
  out << "two_path_cover_exists: " << yes_no(r.two_path_cover_exists) << "\n";
  if (r.two_path_cover) {
    out << "two_path_cover: " << nodes_text(r.two_path_cover->first.nodes()) << " "
        << nodes_text(r.two_path_cover->second.nodes()) << "\n";
  }
  return out.str();
}

}  // namespace spc
