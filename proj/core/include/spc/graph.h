#ifndef SPC_GRAPH_H_
#define SPC_GRAPH_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "spc/path.h"

namespace spc {

using Weight = std::int64_t;
inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::max();

struct Edge {
  NodeId tail;
  NodeId head;
  Weight weight;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  NodeId head;
  Weight weight;
};

// Weighted graph with strictly positive integer weights. Undirected edges are
// stored once in edges() and twice in the adjacency lists.
class Graph {
 public:
  // Throws kInvalidArgument on bad ids, non-positive weights, self-loops or
  // parallel edges.
  Graph(bool directed, int node_count, std::vector<Edge> edges);

  bool directed() const { return directed_; }
  int node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool valid_node(NodeId v) const { return v >= 0 && v < node_count_; }

  // Outgoing arcs sorted by head id.
  const std::vector<Arc>& out(NodeId u) const { return out_[u]; }
  std::optional<Weight> edge_weight(NodeId u, NodeId v) const;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.directed_ == y.directed_ && x.node_count_ == y.node_count_ && x.edges_ == y.edges_;
  }

 private:
  bool directed_;
  int node_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> out_;
};

class DistanceOracle {
 public:
  DistanceOracle(int node_count, std::vector<Weight> table)
      : n_(node_count), table_(std::move(table)) {}

  int node_count() const { return n_; }
  // kUnreachable when there is no u->v path.
  Weight dist(NodeId u, NodeId v) const { return table_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(NodeId u, NodeId v) const { return dist(u, v) != kUnreachable; }

 private:
  int n_;
  std::vector<Weight> table_;
};

// Dijkstra from every source.
DistanceOracle all_pairs_distances(const Graph& graph);

// w lies on some shortest u->v path.
bool on_shortest_path(const DistanceOracle& oracle, NodeId u, NodeId w, NodeId v);

// Some shortest path visits seq in this order. Throws on repeated nodes.
bool is_shortest_path_ordering(const DistanceOracle& oracle, const std::vector<NodeId>& seq);

// Walks the shortest-path DAG taking the smallest admissible next node.
Path canonical_shortest_path(const Graph& graph, const DistanceOracle& oracle, NodeId u, NodeId v);

// Concatenation of canonical segments between consecutive entries of seq.
Path path_through_ordering(const Graph& graph, const DistanceOracle& oracle,
                           const std::vector<NodeId>& seq);

// Visits the permutations of `nodes` that are shortest-path orderings, in
// lexicographic order, pruning on prefixes. Stops as soon as `visit` returns
// true; the return value says whether it did.
bool for_each_shortest_path_ordering(const DistanceOracle& oracle, std::vector<NodeId> nodes,
                                     const std::function<bool(const std::vector<NodeId>&)>& visit);

Weight path_weight(const Graph& graph, const Path& path);

// Kahn's algorithm with smallest-id-first; nullopt for cyclic or undirected
// graphs.
std::optional<std::vector<NodeId>> topological_order(const Graph& graph);

}  // namespace spc

#endif  // SPC_GRAPH_H_
