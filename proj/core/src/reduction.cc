#include "spc/reduction.h"

#include <algorithm>
#include <map>
#include <set>

#include "spc/error.h"

namespace spc {

Path BlowupMapping::project(const Path& path) const {
  std::vector<NodeId> nodes;
  nodes.reserve(path.size());
  for (NodeId x : path.nodes()) nodes.push_back(original(x));
  return Path(std::move(nodes));
}

PathCollection BlowupMapping::project(const PathCollection& paths) const {
  std::vector<Path> out;
  for (const Path& p : paths.paths()) out.push_back(project(p));
  return PathCollection(std::move(out), paths.undirected());
}

Blowup congestion_blowup(const SpcInstance& inst) {
  const int c = inst.c;
  if (c < 1) throw Error(ErrorCode::kInvalidArgument, "congestion bound must be positive");
  const Graph& g = inst.graph;
  Blowup out;
  out.mapping.copies = c;
  out.mapping.original_node_count = g.node_count();

  std::map<NodeId, int> uses;
  for (const TerminalPair& pr : inst.pairs) {
    int rs = uses[pr.source]++;
    int rt = pr.target == pr.source ? rs : uses[pr.target]++;
    out.mapping.terminal_copies.push_back({pr.source * c + rs, pr.target * c + rt});
  }
  for (const auto& [v, count] : uses) {
    if (count > c) return out;
  }

  std::vector<Edge> edges;
  edges.reserve(g.edges().size() * c * c);
  for (const Edge& e : g.edges()) {
    for (int i = 0; i < c; ++i) {
      for (int j = 0; j < c; ++j) {
        edges.push_back({e.tail * c + i, e.head * c + j, e.weight});
      }
    }
  }
  out.dsp = SpcInstance{Graph(g.directed(), g.node_count() * c, std::move(edges)),
                        out.mapping.terminal_copies, 1};
  return out;
}

namespace {

struct Pebbling {
  const Graph& graph;
  const DistanceOracle& oracle;
  const std::vector<TerminalPair>& pairs;
  const std::vector<int>& rank;  // topological rank of each node
  std::uint64_t budget;
  std::uint64_t expansions = 0;
  bool exhausted = false;
  std::vector<std::vector<NodeId>> trails = {};
  std::set<std::vector<NodeId>> dead = {};

  bool occupied(NodeId v, std::size_t except) const {
    for (std::size_t i = 0; i < trails.size(); ++i) {
      if (i != except && trails[i].back() == v) return true;
    }
    return false;
  }

  bool run() {
    std::size_t mover = trails.size();
    for (std::size_t i = 0; i < trails.size(); ++i) {
      if (trails[i].back() == pairs[i].target) continue;
      if (mover == trails.size() || rank[trails[i].back()] < rank[trails[mover].back()]) mover = i;
    }
    if (mover == trails.size()) return true;
    std::vector<NodeId> state;
    for (const auto& t : trails) state.push_back(t.back());
    if (dead.count(state)) return false;

    const NodeId s = pairs[mover].source;
    const NodeId t = pairs[mover].target;
    const NodeId u = trails[mover].back();
    for (const Arc& arc : graph.out(u)) {
      Weight rest = oracle.dist(arc.head, t);
      if (rest == kUnreachable || oracle.dist(s, u) + arc.weight + rest != oracle.dist(s, t)) {
        continue;
      }
      if (occupied(arc.head, mover)) continue;
      if (++expansions > budget) {
        exhausted = true;
        return false;
      }
      trails[mover].push_back(arc.head);
      bool found = run();
      if (found) return true;
      trails[mover].pop_back();
      if (exhausted) return false;
    }
    dead.insert(std::move(state));
    return false;
  }
};

}  // namespace

SpcOutcome dag_dsp(const SpcInstance& inst, const DistanceOracle& oracle,
                   std::uint64_t expansion_budget) {
  auto order = topological_order(inst.graph);
  if (!order) throw Error(ErrorCode::kUnsupportedGraph, "graph is not acyclic");
  for (const TerminalPair& pr : inst.pairs) {
    if (!inst.graph.valid_node(pr.source) || !inst.graph.valid_node(pr.target)) {
      throw Error(ErrorCode::kInvalidArgument, "terminal out of range");
    }
    if (!oracle.reachable(pr.source, pr.target)) {
      throw Error(ErrorCode::kUnreachable, "pair is unreachable");
    }
  }
  SpcOutcome outcome;
  std::set<NodeId> starts;
  for (const TerminalPair& pr : inst.pairs) {
    if (!starts.insert(pr.source).second) return outcome;  // two pebbles on one node
  }
  std::vector<int> rank(inst.graph.node_count());
  for (std::size_t i = 0; i < order->size(); ++i) rank[(*order)[i]] = static_cast<int>(i);

  Pebbling search{inst.graph, oracle, inst.pairs, rank, expansion_budget};
  for (const TerminalPair& pr : inst.pairs) search.trails.push_back({pr.source});
  bool found = search.run();
  outcome.expansions = search.expansions;
  if (found) {
    std::vector<Path> paths;
    for (auto& t : search.trails) paths.emplace_back(std::move(t));
    outcome.status = SolveStatus::kSolved;
    outcome.solution = SpcSolution{PathCollection(std::move(paths))};
  } else {
    outcome.status = search.exhausted ? SolveStatus::kBudgetExceeded : SolveStatus::kInfeasible;
  }
  return outcome;
}

namespace {

SpcOutcome solve_dsp(const SpcInstance& dsp, const DspBackend backend, const SearchLimits& limits) {
  DistanceOracle oracle = all_pairs_distances(dsp.graph);
  if (backend == DspBackend::kDagDp) return dag_dsp(dsp, oracle, limits.expansion_budget);
  return brute_force_spc(dsp, oracle, limits);
}

// Blow-up plus back-end; the solution, if any, is projected back.
SpcOutcome solve_by_blowup(const SpcInstance& inst, DspBackend backend,
                           const SearchLimits& limits) {
  Blowup blown = congestion_blowup(inst);
  SpcOutcome outcome;
  if (!blown.dsp) return outcome;
  outcome = solve_dsp(*blown.dsp, backend, limits);
  if (outcome.solution) {
    PathCollection projected = blown.mapping.project(outcome.solution->paths);
    outcome.solution = SpcSolution{PathCollection(projected.paths(), !inst.graph.directed())};
  }
  return outcome;
}

// Next m-subset of {0..k-1} in colexicographic order.
bool next_colex(std::vector<int>& idx, int k) {
  const std::size_t m = idx.size();
  for (std::size_t i = 0; i < m; ++i) {
    int limit = (i + 1 < m) ? idx[i + 1] : k;
    if (idx[i] + 1 < limit) {
      ++idx[i];
      for (std::size_t j = 0; j < i; ++j) idx[j] = static_cast<int>(j);
      return true;
    }
  }
  return false;
}

}  // namespace

ReductionOutcome spc_via_dsp_reduction(const SpcInstance& inst, const DistanceOracle& oracle,
                                       DspBackend backend, const SearchLimits& limits) {
  check_instance(inst, oracle);
  int factor;
  if (!inst.graph.directed()) {
    factor = 4;
  } else if (topological_order(inst.graph)) {
    factor = 3;
  } else {
    throw Error(ErrorCode::kUnsupportedGraph,
                "the reduction covers undirected graphs and DAGs only");
  }
  const int k = inst.k();
  const int d = inst.d();
  ReductionOutcome result;
  result.subset_size = factor * d;

  if (k <= result.subset_size) {
    result.direct = true;
    result.outcome = solve_by_blowup(inst, backend, limits);
    return result;
  }

  std::vector<int> idx(result.subset_size);
  for (int i = 0; i < result.subset_size; ++i) idx[i] = i;
  do {
    ++result.subsets_tried;
    std::vector<Path> chosen(k);
    if (!idx.empty()) {
      SpcInstance sub{inst.graph, {}, result.subset_size - d};
      for (int i : idx) sub.pairs.push_back(inst.pairs[i]);
      SpcOutcome part = solve_by_blowup(sub, backend, limits);
      result.outcome.expansions += part.expansions;
      if (part.status == SolveStatus::kBudgetExceeded) {
        result.outcome.status = SolveStatus::kBudgetExceeded;
        return result;
      }
      if (part.status != SolveStatus::kSolved) continue;
      for (std::size_t j = 0; j < idx.size(); ++j) chosen[idx[j]] = part.solution->paths[j];
    }
    std::vector<bool> in_subset(k, false);
    for (int i : idx) in_subset[i] = true;
    for (int i = 0; i < k; ++i) {
      if (!in_subset[i]) {
        chosen[i] = canonical_shortest_path(inst.graph, oracle, inst.pairs[i].source,
                                            inst.pairs[i].target);
      }
    }
    result.outcome.status = SolveStatus::kSolved;
    result.outcome.solution = SpcSolution{PathCollection(std::move(chosen), !inst.graph.directed())};
    return result;
  } while (next_colex(idx, k));
  result.outcome.status = SolveStatus::kInfeasible;
  return result;
}

}  // namespace spc
