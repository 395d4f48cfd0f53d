#include "spc/graph.h"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "spc/error.h"

namespace spc {

Graph::Graph(bool directed, int node_count, std::vector<Edge> edges)
    : directed_(directed), node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 0) throw Error(ErrorCode::kInvalidArgument, "negative node count");
  out_.resize(node_count_);
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : edges_) {
    if (!valid_node(e.tail) || !valid_node(e.head)) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range: " +
                                                   std::to_string(e.tail) + " " +
                                                   std::to_string(e.head));
    }
    if (e.tail == e.head) {
      throw Error(ErrorCode::kInvalidArgument, "self-loop at node " + std::to_string(e.tail));
    }
    if (e.weight <= 0) {
      throw Error(ErrorCode::kInvalidArgument, "non-positive weight on edge " +
                                                   std::to_string(e.tail) + " " +
                                                   std::to_string(e.head));
    }
    auto key = directed_ ? std::make_pair(e.tail, e.head)
                         : std::make_pair(std::min(e.tail, e.head), std::max(e.tail, e.head));
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kInvalidArgument, "parallel edge " + std::to_string(e.tail) + " " +
                                                   std::to_string(e.head));
    }
    out_[e.tail].push_back({e.head, e.weight});
    if (!directed_) out_[e.head].push_back({e.tail, e.weight});
  }
  for (auto& arcs : out_) {
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.head < y.head; });
  }
}

std::optional<Weight> Graph::edge_weight(NodeId u, NodeId v) const {
  if (!valid_node(u) || !valid_node(v)) return std::nullopt;
  const auto& arcs = out_[u];
  auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                             [](const Arc& a, NodeId id) { return a.head < id; });
  if (it == arcs.end() || it->head != v) return std::nullopt;
  return it->weight;
}

DistanceOracle all_pairs_distances(const Graph& graph) {
  const int n = graph.node_count();
  std::vector<Weight> table(static_cast<std::size_t>(n) * n, kUnreachable);
  using Item = std::pair<Weight, NodeId>;
  for (NodeId s = 0; s < n; ++s) {
    Weight* row = &table[static_cast<std::size_t>(s) * n];
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    row[s] = 0;
    heap.push({0, s});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d != row[u]) continue;
      for (const Arc& arc : graph.out(u)) {
        Weight nd = d + arc.weight;
        if (nd < row[arc.head]) {
          row[arc.head] = nd;
          heap.push({nd, arc.head});
        }
      }
    }
  }
  return DistanceOracle(n, std::move(table));
}

bool on_shortest_path(const DistanceOracle& oracle, NodeId u, NodeId w, NodeId v) {
  Weight uw = oracle.dist(u, w);
  Weight wv = oracle.dist(w, v);
  if (uw == kUnreachable || wv == kUnreachable) return false;
  return uw + wv == oracle.dist(u, v);
}

bool is_shortest_path_ordering(const DistanceOracle& oracle, const std::vector<NodeId>& seq) {
  if (seq.empty()) throw Error(ErrorCode::kInvalidArgument, "empty ordering");
  std::vector<NodeId> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "ordering repeats a node");
  }
  Weight total = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    Weight d = oracle.dist(seq[i], seq[i + 1]);
    if (d == kUnreachable) return false;
    total += d;
  }
  return total == oracle.dist(seq.front(), seq.back());
}

Path canonical_shortest_path(const Graph& graph, const DistanceOracle& oracle, NodeId u,
                             NodeId v) {
  if (!graph.valid_node(u) || !graph.valid_node(v)) {
    throw Error(ErrorCode::kInvalidArgument, "node out of range");
  }
  if (!oracle.reachable(u, v)) {
    throw Error(ErrorCode::kUnreachable,
                std::to_string(v) + " is unreachable from " + std::to_string(u));
  }
  std::vector<NodeId> nodes{u};
  NodeId x = u;
  while (x != v) {
    Weight remaining = oracle.dist(x, v);
    for (const Arc& arc : graph.out(x)) {
      Weight rest = oracle.dist(arc.head, v);
      if (rest != kUnreachable && arc.weight + rest == remaining) {
        x = arc.head;
        break;
      }
    }
    nodes.push_back(x);
  }
  return Path(std::move(nodes));
}

Path path_through_ordering(const Graph& graph, const DistanceOracle& oracle,
                           const std::vector<NodeId>& seq) {
  if (!is_shortest_path_ordering(oracle, seq)) {
    throw Error(ErrorCode::kPrecondition, "not a shortest-path ordering");
  }
  std::vector<NodeId> nodes{seq.front()};
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    Path piece = canonical_shortest_path(graph, oracle, seq[i], seq[i + 1]);
    nodes.insert(nodes.end(), piece.nodes().begin() + 1, piece.nodes().end());
  }
  return Path(std::move(nodes));
}

namespace {

struct OrderingSearch {
  const DistanceOracle& oracle;
  const std::vector<NodeId>& nodes;
  const std::function<bool(const std::vector<NodeId>&)>& visit;
  std::vector<NodeId> prefix;
  std::vector<bool> used;

  bool run() {
    if (prefix.size() == nodes.size()) return visit(prefix);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (used[i]) continue;
      NodeId x = nodes[i];
      if (!prefix.empty()) {
        // prefix is an ordering, so its weight is dist(first, last).
        Weight head = oracle.dist(prefix.front(), prefix.back());
        Weight step = oracle.dist(prefix.back(), x);
        if (step == kUnreachable || head + step != oracle.dist(prefix.front(), x)) continue;
      }
      used[i] = true;
      prefix.push_back(x);
      bool stop = run();
      prefix.pop_back();
      used[i] = false;
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

bool for_each_shortest_path_ordering(const DistanceOracle& oracle, std::vector<NodeId> nodes,
                                     const std::function<bool(const std::vector<NodeId>&)>& visit) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.empty()) return false;
  OrderingSearch search{oracle, nodes, visit, {}, std::vector<bool>(nodes.size(), false)};
  return search.run();
}

Weight path_weight(const Graph& graph, const Path& path) {
  Weight total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto w = graph.edge_weight(path[i], path[i + 1]);
    if (!w) return kUnreachable;
    total += *w;
  }
  return total;
}

std::optional<std::vector<NodeId>> topological_order(const Graph& graph) {
  if (!graph.directed()) return std::nullopt;
  const int n = graph.node_count();
  std::vector<int> indegree(n, 0);
  for (const Edge& e : graph.edges()) ++indegree[e.head];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<NodeId> order;
  while (!ready.empty()) {
    NodeId u = ready.top();
    ready.pop();
    order.push_back(u);
    for (const Arc& arc : graph.out(u)) {
      if (--indegree[arc.head] == 0) ready.push(arc.head);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

}  // namespace spc
