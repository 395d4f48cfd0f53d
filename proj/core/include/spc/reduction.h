#ifndef SPC_REDUCTION_H_
#define SPC_REDUCTION_H_

#include <optional>
#include <vector>

#include "spc/spc.h"

namespace spc {

// Node v of the original graph becomes copies v*c .. v*c + c - 1.
struct BlowupMapping {
  int copies = 1;
  int original_node_count = 0;
  std::vector<TerminalPair> terminal_copies;  // per pair, in the blown graph

  NodeId copy(NodeId v, int r) const { return v * copies + r; }
  NodeId original(NodeId x) const { return x / copies; }
  Path project(const Path& path) const;
  PathCollection project(const PathCollection& paths) const;
};

struct Blowup {
  BlowupMapping mapping;
  // Absent when some node is a terminal of more than c pairs.
  std::optional<SpcInstance> dsp;
};

// Each edge (u,v,w) becomes (u^i, v^j, w) for all copies i, j. The r-th pair
// that uses a node as a terminal gets copy r of it; a pair with s = t uses one
// copy for both ends.
Blowup congestion_blowup(const SpcInstance& inst);

// Node-disjoint shortest paths on a DAG. Pebbles walk their own shortest-path
// DAGs and the pebble furthest back in topological order always moves first,
// so disjointness only has to be checked against current positions. Ignores
// inst.c. Throws kUnsupportedGraph on cyclic or undirected graphs.
SpcOutcome dag_dsp(const SpcInstance& inst, const DistanceOracle& oracle,
                   std::uint64_t expansion_budget = 50'000'000);

enum class DspBackend { kBrute, kDagDp };

struct ReductionOutcome {
  SpcOutcome outcome;
  int subset_size = 0;            // 4d (undirected) or 3d (DAG)
  bool direct = false;            // k <= subset_size, solved without subsets
  std::size_t subsets_tried = 0;
};

// Solves (k,c)-SPC on undirected graphs and DAGs through k-DSP. Directed
// graphs with cycles are refused with kUnsupportedGraph.
ReductionOutcome spc_via_dsp_reduction(const SpcInstance& inst, const DistanceOracle& oracle,
                                       DspBackend backend, const SearchLimits& limits = {});

}  // namespace spc

#endif  // SPC_REDUCTION_H_
