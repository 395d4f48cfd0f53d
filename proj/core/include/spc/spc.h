#ifndef SPC_SPC_H_
#define SPC_SPC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spc/collection.h"
#include "spc/graph.h"

namespace spc {

struct TerminalPair {
  NodeId source;
  NodeId target;
  friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

// (k,c)-SPC: one shortest path per pair, every node on at most c of them.
struct SpcInstance {
  Graph graph;
  std::vector<TerminalPair> pairs;
  int c = 1;

  int k() const { return static_cast<int>(pairs.size()); }
  int d() const { return k() - c; }
  friend bool operator==(const SpcInstance&, const SpcInstance&) = default;
};

// Throws kInvalidArgument unless 1 <= c <= k, ids are valid and every target
// is reachable from its source.
void check_instance(const SpcInstance& inst, const DistanceOracle& oracle);

struct SpcSolution {
  PathCollection paths;  // index i serves pairs[i]
};

struct Violation {
  enum class Kind { kCountMismatch, kWrongTerminal, kNotShortest, kCongestion };
  Kind kind;
  std::size_t index = 0;  // path index, where applicable
  NodeId node = -1;       // overloaded node, for kCongestion
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_solution(const SpcInstance& inst, const DistanceOracle& oracle,
                                   const SpcSolution& sol);

struct PathEnumeration {
  std::vector<Path> paths;
  bool overflow = false;
};

// All shortest s->t paths in lexicographic order, at most `cap` of them.
PathEnumeration enumerate_shortest_paths(const Graph& graph, const DistanceOracle& oracle,
                                         NodeId s, NodeId t, std::size_t cap);

// Number of shortest s->t paths by dynamic programming over the shortest-path
// DAG, saturating at UINT64_MAX.
std::uint64_t count_shortest_paths(const Graph& graph, const DistanceOracle& oracle, NodeId s,
                                   NodeId t);

struct SearchLimits {
  std::uint64_t expansion_budget = 50'000'000;  // candidate paths tried
  std::size_t path_cap = 1'000'000;             // shortest paths per pair
};

enum class SolveStatus { kSolved, kInfeasible, kBudgetExceeded };
const char* solve_status_name(SolveStatus status);

struct SpcOutcome {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<SpcSolution> solution;
  std::uint64_t expansions = 0;
};

// Exhaustive product search over per-pair shortest paths, pairs in order,
// paths in lexicographic order; the first feasible assignment wins.
SpcOutcome brute_force_spc(const SpcInstance& inst, const DistanceOracle& oracle,
                           const SearchLimits& limits = {});

struct KeyPropertyResult {
  bool holds = true;
  std::vector<NodeId> failing_subset;
};

// Every N-subset of W (all of W when |W| < N) lies on one path of coll.
KeyPropertyResult key_property_check(const PathCollection& coll, std::vector<NodeId> W, int N);

// Calls visit(subset) for each size-m subset of `items` in lexicographic order
// until it returns true. Returns whether it stopped early.
bool for_each_subset(const std::vector<NodeId>& items, std::size_t m,
                     const std::function<bool(const std::vector<NodeId>&)>& visit);

}  // namespace spc

#endif  // SPC_SPC_H_
