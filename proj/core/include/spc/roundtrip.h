#ifndef SPC_ROUNDTRIP_H_
#define SPC_ROUNDTRIP_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spc/collection.h"
#include "spc/graph.h"
#include "spc/merge.h"
#include "spc/supplier.h"

namespace spc {

enum class PathKind { kTrivial, kReversing, kNonReversing };
const char* path_kind_name(PathKind kind);

// Three-segment decomposition of a shortest a->b path with respect to the
// marked nodes Wp on it. For an interior marked node w the candidate orderings
// are b->a->w, w->b->a and b->w->a. Segment 1 nodes admit only the first,
// segment 3 nodes only the second, and segment 2 nodes either both of those
// (non-reversing) or only the third (reversing).
struct SegmentPartition {
  PathKind kind = PathKind::kNonReversing;
  std::optional<NodeId> witness;  // a node admitting none of the three
  std::optional<NodeId> w1;       // last node of segment 1
  std::optional<NodeId> w2;       // first node of segment 3
  std::vector<std::pair<NodeId, int>> labels;  // marked nodes in path order

  int segment(NodeId v) const;  // 0 when v is not a labelled node
};

// Throws kStructuralInconsistency if the labels are not contiguous or a node
// falls outside the three allowed ordering profiles.
SegmentPartition classify_segments(const Path& path, const std::vector<NodeId>& Wp,
                                   const DistanceOracle& oracle);

struct TrapPair {
  NodeId low;   // farthest marked node from a that is no farther than v
  NodeId high;  // nearest marked node from a that is no nearer than v
  bool low_clamped = false;
  bool high_clamped = false;
};

TrapPair trapping_nodes(NodeId v, const std::vector<NodeId>& Wp, NodeId a,
                        const DistanceOracle& oracle);

// Pairs (a_i, b_i), extra nodes U, and the target set. T is the union of the
// pair nodes and U; the reroute produces a path through target ∪ T.
struct CriticalSpec {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<NodeId> extra;
  std::vector<NodeId> target;
};

// Runs the reroute inside a workspace and returns the index of the path that
// ends up holding target ∪ T. `on_fetch` sees every path the supplier hands
// out.
std::size_t critical_node_reroute(Workspace& ws, const CriticalSpec& spec, Supplier& supplier,
                                  const DistanceOracle& oracle,
                                  const std::function<void(const Path&)>& on_fetch = {});

MergeResult critical_node_reroute(PathCollection coll, const CriticalSpec& spec,
                                  Supplier& supplier, const DistanceOracle& oracle);

// x is the cyclic list of marked nodes along the path. A beginning path at i
// visits v, x_i, x_{i+1} in order; an ending path visits x_i, x_{i+1}, v.
// Returns (s, t): x_{s+1} is the marked node nearest from v and t is the first
// index after s, cyclically, without an ending path.
std::pair<std::size_t, std::size_t> find_cyclic_break(const std::vector<NodeId>& x, NodeId v,
                                                      Supplier& supplier, const Workspace& ws,
                                                      const DistanceOracle& oracle);

struct CoverOutcome {
  enum class Kind { kSinglePath, kTwoPaths };
  Kind kind = Kind::kSinglePath;
  std::size_t first = 0;
  std::size_t second = 0;  // kTwoPaths only
  // For kTwoPaths: the first and last W-nodes of `second` are the last and
  // first W-nodes of `first`. When false, only the stretch of `second` from
  // the last to the first W-node of `first` is claimed.
  bool exact_boundary = true;
};

struct RoundtripResult {
  PathCollection paths;
  CoverOutcome outcome;
  MergeTrace trace;
  std::vector<std::string> case_log;
  int iterations = 0;
};

// Covers W by one shortest path, or by a shortest a->b path and a shortest
// b->a path. Needs every 11 nodes of W on a common path of the supplier.
RoundtripResult roundtrip_cover(const Graph& graph, const DistanceOracle& oracle,
                                PathCollection coll, std::vector<NodeId> W, Supplier& supplier);

// Empty string when the outcome satisfies its invariants.
std::string check_cover(const PathCollection& paths, const CoverOutcome& outcome,
                        const std::vector<NodeId>& W);

}  // namespace spc

#endif  // SPC_ROUNDTRIP_H_
