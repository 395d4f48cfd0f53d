#include "spc/spc.h"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "spc/error.h"

namespace spc {

void check_instance(const SpcInstance& inst, const DistanceOracle& oracle) {
  if (inst.k() < 1) throw Error(ErrorCode::kInvalidArgument, "instance has no pairs");
  if (inst.c < 1 || inst.c > inst.k()) {
    throw Error(ErrorCode::kInvalidArgument, "congestion bound must satisfy 1 <= c <= k");
  }
  for (const TerminalPair& pr : inst.pairs) {
    if (!inst.graph.valid_node(pr.source) || !inst.graph.valid_node(pr.target)) {
      throw Error(ErrorCode::kInvalidArgument, "terminal out of range");
    }
    if (!oracle.reachable(pr.source, pr.target)) {
      throw Error(ErrorCode::kUnreachable, "pair " + std::to_string(pr.source) + " " +
                                               std::to_string(pr.target) + " is unreachable");
    }
  }
}

ValidationReport validate_solution(const SpcInstance& inst, const DistanceOracle& oracle,
                                   const SpcSolution& sol) {
  ValidationReport report;
  const PathCollection& paths = sol.paths;
  if (paths.size() != inst.pairs.size()) {
    report.violations.push_back({Violation::Kind::kCountMismatch, 0, -1,
                                 "expected " + std::to_string(inst.pairs.size()) + " paths, got " +
                                     std::to_string(paths.size())});
    return report;
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& path = paths[i];
    if (path.empty() || path.front() != inst.pairs[i].source ||
        path.back() != inst.pairs[i].target) {
      report.violations.push_back(
          {Violation::Kind::kWrongTerminal, i, -1, "path " + std::to_string(i) + " has wrong terminals"});
    }
    if (!validate_path(inst.graph, oracle, path)) {
      report.violations.push_back(
          {Violation::Kind::kNotShortest, i, -1, "path " + std::to_string(i) + " is not a shortest path"});
    }
  }
  const CongestionMap cong = congestion_map(paths);
  for (const auto& [v, count] : cong.counts()) {
    if (count > inst.c) {
      report.violations.push_back({Violation::Kind::kCongestion, 0, v,
                                   "node " + std::to_string(v) + " lies on " +
                                       std::to_string(count) + " paths"});
    }
  }
  return report;
}

namespace {

void check_pair(const Graph& graph, const DistanceOracle& oracle, NodeId s, NodeId t) {
  if (!graph.valid_node(s) || !graph.valid_node(t)) {
    throw Error(ErrorCode::kInvalidArgument, "node out of range");
  }
  if (!oracle.reachable(s, t)) {
    throw Error(ErrorCode::kUnreachable,
                std::to_string(t) + " is unreachable from " + std::to_string(s));
  }
}

// Arc u->v lies on a shortest s->t path.
bool tight(const DistanceOracle& oracle, NodeId s, NodeId t, NodeId u, const Arc& arc) {
  Weight rest = oracle.dist(arc.head, t);
  return rest != kUnreachable && oracle.dist(s, u) + arc.weight + rest == oracle.dist(s, t);
}

}  // namespace

PathEnumeration enumerate_shortest_paths(const Graph& graph, const DistanceOracle& oracle,
                                         NodeId s, NodeId t, std::size_t cap) {
  check_pair(graph, oracle, s, t);
  if (cap < 1) throw Error(ErrorCode::kInvalidArgument, "cap must be positive");
  PathEnumeration out;
  std::vector<NodeId> stack{s};
  std::function<bool()> walk = [&]() -> bool {
    NodeId u = stack.back();
    if (u == t) {
      if (out.paths.size() == cap) {
        out.overflow = true;
        return true;
      }
      out.paths.emplace_back(stack);
      return false;
    }
    for (const Arc& arc : graph.out(u)) {
      if (!tight(oracle, s, t, u, arc)) continue;
      stack.push_back(arc.head);
      bool stop = walk();
      stack.pop_back();
      if (stop) return true;
    }
    return false;
  };
  walk();
  return out;
}

std::uint64_t count_shortest_paths(const Graph& graph, const DistanceOracle& oracle, NodeId s,
                                   NodeId t) {
  check_pair(graph, oracle, s, t);
  // Process nodes on the shortest-path DAG by distance from s.
  std::vector<NodeId> nodes;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (on_shortest_path(oracle, s, v, t)) nodes.push_back(v);
  }
  std::sort(nodes.begin(), nodes.end(),
            [&](NodeId x, NodeId y) { return oracle.dist(s, x) < oracle.dist(s, y); });
  std::vector<std::uint64_t> ways(graph.node_count(), 0);
  ways[s] = 1;
  const std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (NodeId u : nodes) {
    for (const Arc& arc : graph.out(u)) {
      if (!tight(oracle, s, t, u, arc)) continue;
      std::uint64_t& dst = ways[arc.head];
      dst = (kMax - dst < ways[u]) ? kMax : dst + ways[u];
    }
  }
  return ways[t];
}

const char* solve_status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSolved: return "solved";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kBudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

namespace {

struct ProductSearch {
  const std::vector<std::vector<Path>>& candidates;
  int c;
  std::uint64_t budget;
  std::uint64_t expansions = 0;
  bool exhausted = false;
  std::vector<int> load = {};
  std::vector<std::size_t> choice = {};
  // (depth, load) states already shown to have no completion.
  std::unordered_set<std::string> dead = {};

  std::string key(std::size_t depth) const {
    std::string k(reinterpret_cast<const char*>(&depth), sizeof depth);
    for (int x : load) k.push_back(static_cast<char>(x));
    return k;
  }

  bool run(std::size_t depth) {
    if (depth == candidates.size()) return true;
    std::string state = key(depth);
    if (dead.count(state)) return false;
    for (std::size_t i = 0; i < candidates[depth].size(); ++i) {
      if (++expansions > budget) {
        exhausted = true;
        return false;
      }
      const Path& path = candidates[depth][i];
      bool fits = std::all_of(path.nodes().begin(), path.nodes().end(),
                              [&](NodeId v) { return load[v] < c; });
      if (!fits) continue;
      for (NodeId v : path.nodes()) ++load[v];
      choice[depth] = i;
      bool found = run(depth + 1);
      for (NodeId v : path.nodes()) --load[v];
      if (found) return true;
      if (exhausted) return false;
    }
    dead.insert(std::move(state));
    return false;
  }
};

}  // namespace

SpcOutcome brute_force_spc(const SpcInstance& inst, const DistanceOracle& oracle,
                           const SearchLimits& limits) {
  check_instance(inst, oracle);
  SpcOutcome outcome;
  std::vector<std::vector<Path>> candidates;
  for (const TerminalPair& pr : inst.pairs) {
    PathEnumeration e =
        enumerate_shortest_paths(inst.graph, oracle, pr.source, pr.target, limits.path_cap);
    if (e.overflow) {
      outcome.status = SolveStatus::kBudgetExceeded;
      return outcome;
    }
    candidates.push_back(std::move(e.paths));
  }
  ProductSearch search{candidates, inst.c, limits.expansion_budget};
  search.load.assign(inst.graph.node_count(), 0);
  search.choice.assign(candidates.size(), 0);
  bool found = search.run(0);
  outcome.expansions = search.expansions;
  if (found) {
    std::vector<Path> chosen;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i][search.choice[i]]);
    }
    outcome.status = SolveStatus::kSolved;
    outcome.solution = SpcSolution{PathCollection(std::move(chosen), !inst.graph.directed())};
  } else {
    outcome.status = search.exhausted ? SolveStatus::kBudgetExceeded : SolveStatus::kInfeasible;
  }
  return outcome;
}

bool for_each_subset(const std::vector<NodeId>& items, std::size_t m,
                     const std::function<bool(const std::vector<NodeId>&)>& visit) {
  if (m > items.size()) return false;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::vector<NodeId> subset(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) subset[i] = items[idx[i]];
    if (visit(subset)) return true;
    // Advance to the next combination in lexicographic order.
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == items.size() - m + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

KeyPropertyResult key_property_check(const PathCollection& coll, std::vector<NodeId> W, int N) {
  if (N < 1) throw Error(ErrorCode::kInvalidArgument, "subset size must be positive");
  std::sort(W.begin(), W.end());
  W.erase(std::unique(W.begin(), W.end()), W.end());
  KeyPropertyResult result;
  if (W.empty()) return result;
  std::size_t m = std::min<std::size_t>(N, W.size());
  for_each_subset(W, m, [&](const std::vector<NodeId>& subset) {
    for (const Path& path : coll.paths()) {
      if (path.contains_all(subset)) return false;
    }
    result.holds = false;
    result.failing_subset = subset;
    return true;
  });
  return result;
}

}  // namespace spc
