#include "spc/merge.h"

#include <algorithm>
#include <string>

#include "spc/error.h"

namespace spc {

namespace {

std::vector<NodeId> normalized(std::vector<NodeId> W, const Graph& graph) {
  std::sort(W.begin(), W.end());
  W.erase(std::unique(W.begin(), W.end()), W.end());
  if (W.empty()) throw Error(ErrorCode::kInvalidArgument, "W is empty");
  for (NodeId v : W) {
    if (!graph.valid_node(v)) throw Error(ErrorCode::kInvalidArgument, "W node out of range");
  }
  return W;
}

std::size_t fetch(Supplier& supplier, Workspace& ws, const OrderQuery& query) {
  auto hit = supplier.find(ws, query);
  if (!hit) {
    throw Error(ErrorCode::kSupplierExhausted, "no path contains " + describe(query));
  }
  return *hit;
}

// Takes W in `order` with a = order.front(), b = order.back(): the working
// path P always holds a, v_1 .. v_l, b; the next node comes in through the
// tail P'[v_l, b] of a path containing v_l, v_{l+1}, b. W-nodes further along
// the old tail may drop out, so the recorded coverage is that guaranteed
// prefix, not everything P happens to touch.
MergeResult grow(PathCollection coll, const std::vector<NodeId>& W,
                 const std::vector<NodeId>& order, Supplier& supplier) {
  Workspace ws{std::move(coll), {}};
  const NodeId a = order.front();
  const NodeId b = order.back();
  std::vector<NodeId> held{a};
  if (b != a) held.push_back(b);
  if (order.size() >= 3) held.push_back(order[1]);
  std::size_t p = fetch(supplier, ws, {held, {}});
  auto snapshot = [&] {
    if (!ws.paths[p].contains_all(held)) {
      throw Error(ErrorCode::kStructuralInconsistency,
                  "merge step lost a node it had already placed");
    }
    std::vector<NodeId> sorted = held;
    std::sort(sorted.begin(), sorted.end());
    ws.trace.covered.push_back(std::move(sorted));
  };
  snapshot();
  for (std::size_t l = 2; l + 1 < order.size(); ++l) {
    const NodeId next = order[l];
    held.push_back(next);
    if (ws.paths[p].contains(next)) {
      snapshot();
      continue;
    }
    const NodeId last = order[l - 1];
    std::size_t q = fetch(supplier, ws, {{last, next, b}, {}});
    ws.swap(p, q, last, b);
    snapshot();
  }
  if (!ws.paths[p].contains_all(W)) {
    throw Error(ErrorCode::kStructuralInconsistency, "merged path misses part of W");
  }
  return {std::move(ws.paths), p, std::move(ws.trace)};
}

}  // namespace

MergeResult merge_dag(const Graph& graph, const DistanceOracle& oracle, PathCollection coll,
                      std::vector<NodeId> W, Supplier& supplier) {
  (void)oracle;
  W = normalized(std::move(W), graph);
  auto topo = topological_order(graph);
  if (!topo) throw Error(ErrorCode::kUnsupportedGraph, "graph is not acyclic");
  std::vector<int> rank(graph.node_count());
  for (std::size_t i = 0; i < topo->size(); ++i) rank[(*topo)[i]] = static_cast<int>(i);
  std::vector<NodeId> order = W;
  std::sort(order.begin(), order.end(), [&](NodeId x, NodeId y) { return rank[x] < rank[y]; });
  return grow(std::move(coll), W, order, supplier);
}

MergeResult merge_undirected(const Graph& graph, const DistanceOracle& oracle,
                             PathCollection coll, std::vector<NodeId> W, Supplier& supplier) {
  if (graph.directed()) throw Error(ErrorCode::kUnsupportedGraph, "graph is directed");
  W = normalized(std::move(W), graph);
  NodeId a = W.front();
  NodeId b = W.front();
  Weight best = -1;
  for (std::size_t i = 0; i < W.size(); ++i) {
    for (std::size_t j = i + 1; j < W.size(); ++j) {
      Weight d = oracle.dist(W[i], W[j]);
      if (d == kUnreachable) {
        throw Error(ErrorCode::kPrecondition, "W spans more than one component");
      }
      if (d > best) {
        best = d;
        a = W[i];
        b = W[j];
      }
    }
  }
  std::vector<NodeId> order{a};
  for (NodeId v : W) {
    if (v != a && v != b) order.push_back(v);
  }
  std::stable_sort(order.begin() + 1, order.end(),
                   [&](NodeId x, NodeId y) { return oracle.dist(a, x) < oracle.dist(a, y); });
  if (b != a) order.push_back(b);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (oracle.dist(a, order[i]) == oracle.dist(a, order[i + 1])) {
      throw Error(ErrorCode::kClaimFailed, "two nodes of W are equally far from " +
                                               std::to_string(a) + ": " +
                                               std::to_string(order[i]) + " and " +
                                               std::to_string(order[i + 1]));
    }
  }
  coll = PathCollection(coll.paths(), true);
  return grow(std::move(coll), W, order, supplier);
}

}  // namespace spc
