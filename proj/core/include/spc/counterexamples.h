#ifndef SPC_COUNTEREXAMPLES_H_
#define SPC_COUNTEREXAMPLES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spc/graph.h"
#include "spc/spc.h"

namespace spc {

// Directed n-cycle: i -> i+1 with weight 1, i+1 -> i with weight a.
Graph build_bidirectional_cycle(int n, Weight a);

// Directed unit n-cycle with pairs (i, i + 3n/4 mod n) and c = 3n/4 + 1.
SpcInstance build_appendixB_instance(int n);

struct PreconditionResult {
  bool holds = true;
  std::vector<NodeId> failing_subset;
  std::size_t subsets_checked = 0;
};

// Every subset of the pool of size min(set_size, |pool|) has a permutation that
// is a shortest-path ordering. Throws kCapExceeded past `subset_cap` subsets.
PreconditionResult verify_local_precondition(const DistanceOracle& oracle, int set_size,
                                             std::vector<NodeId> pool,
                                             std::size_t subset_cap = 1'000'000);

struct SingleCoverResult {
  bool none = true;  // no shortest path contains all of W
  std::optional<Path> witness;
};

// Throws kCapExceeded once more than `path_cap` paths have been enumerated.
SingleCoverResult verify_no_single_cover(const Graph& graph, const DistanceOracle& oracle,
                                         std::vector<NodeId> W,
                                         std::size_t path_cap = 1'000'000);

// A shortest s->t path and a shortest t->s path whose union holds W, found by
// enumeration over all ordered pairs.
std::optional<std::pair<Path, Path>> find_roundtrip_cover(const Graph& graph,
                                                          const DistanceOracle& oracle,
                                                          std::vector<NodeId> W,
                                                          std::size_t path_cap = 1'000'000);

struct CounterexampleReport {
  std::string name;
  int node_count = 0;

  std::optional<bool> precondition_holds;
  std::vector<NodeId> precondition_failure;
  std::size_t precondition_subsets = 0;

  // Some single path covers the target set: any shortest path for the cycle,
  // a solution path for an SPC instance.
  bool single_cover_exists = false;
  std::optional<Path> single_cover;

  bool two_path_cover_exists = false;
  std::optional<std::pair<Path, Path>> two_path_cover;

  // SPC instances only.
  std::optional<bool> unique_solution;
  std::optional<bool> solution_valid;
  std::optional<bool> solver_agrees;
  std::optional<bool> congestion_exact;
  std::vector<NodeId> max_congestion_nodes;
};

CounterexampleReport verify_bidirectional_cycle(int n, Weight a, int set_size);
CounterexampleReport verify_appendixB(const SpcInstance& inst);

// "key: value" lines in a fixed order.
std::string render_report(const CounterexampleReport& report);

}  // namespace spc

#endif  // SPC_COUNTEREXAMPLES_H_
