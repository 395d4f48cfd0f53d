#ifndef SPC_MERGE_H_
#define SPC_MERGE_H_

#include <cstddef>
#include <vector>

#include "spc/collection.h"
#include "spc/graph.h"
#include "spc/supplier.h"

namespace spc {

struct MergeResult {
  PathCollection paths;
  std::size_t index = 0;  // the path through all of W
  MergeTrace trace;
};

// Grows one path through all of W on a DAG, taking W in topological order and
// swapping in the tail of a path through the next node. Needs every 3 nodes
// of W on a common path; a missing one raises kSupplierExhausted.
MergeResult merge_dag(const Graph& graph, const DistanceOracle& oracle, PathCollection coll,
                      std::vector<NodeId> W, Supplier& supplier);

// Undirected version: a, b are the farthest pair of W, the rest is taken by
// distance from a. Needs every 4 nodes of W on a common path.
MergeResult merge_undirected(const Graph& graph, const DistanceOracle& oracle,
                             PathCollection coll, std::vector<NodeId> W, Supplier& supplier);

}  // namespace spc

#endif  // SPC_MERGE_H_
