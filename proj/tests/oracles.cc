#include "oracles.h"

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

std::vector<std::vector<std::pair<NodeId, Weight>>> arcs(const Graph& g) {
  std::vector<std::vector<std::pair<NodeId, Weight>>> adj(g.node_count());
  for (const auto& e : g.edges()) {
    adj[e.tail].push_back({e.head, e.weight});
    if (!g.directed()) adj[e.head].push_back({e.tail, e.weight});
  }
  return adj;
}

}  // namespace

Table floyd_warshall(const Graph& g) {
  int n = g.node_count();
  Table d(n, std::vector<Weight>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) {
    d[e.tail][e.head] = std::min(d[e.tail][e.head], e.weight);
    if (!g.directed()) d[e.head][e.tail] = std::min(d[e.head][e.tail], e.weight);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] != kInf && d[k][j] != kInf && d[i][k] + d[k][j] < d[i][j])
          d[i][j] = d[i][k] + d[k][j];
  return d;
}

Table bellman_ford(const Graph& g) {
  int n = g.node_count();
  auto adj = arcs(g);
  Table out;
  for (int s = 0; s < n; ++s) {
    std::vector<Weight> d(n, kInf);
    d[s] = 0;
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (int u = 0; u < n; ++u) {
        if (d[u] == kInf) continue;
        for (auto [v, w] : adj[u]) {
          if (d[u] + w < d[v]) {
            d[v] = d[u] + w;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    out.push_back(d);
  }
  return out;
}

std::vector<std::vector<NodeId>> shortest_paths_by_dfs(const Graph& g, NodeId s, NodeId t) {
  auto adj = arcs(g);
  std::vector<std::pair<Weight, std::vector<NodeId>>> all;
  std::vector<NodeId> cur{s};
  std::vector<bool> seen(g.node_count(), false);
  seen[s] = true;
  std::function<void(NodeId, Weight)> go = [&](NodeId u, Weight w) {
    if (u == t) {
      all.push_back({w, cur});
      return;
    }
    for (auto [v, c] : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      cur.push_back(v);
      go(v, w + c);
      cur.pop_back();
      seen[v] = false;
    }
  };
  go(s, 0);
  std::vector<std::vector<NodeId>> best;
  if (all.empty()) return best;
  Weight m = kInf;
  for (auto& [w, p] : all) m = std::min(m, w);
  for (auto& [w, p] : all)
    if (w == m) best.push_back(p);
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<int> recount(int n, const std::vector<std::vector<NodeId>>& paths) {
  std::vector<int> c(n, 0);
  for (const auto& p : paths)
    for (NodeId v : p) ++c[v];
  return c;
}

std::optional<std::vector<std::vector<NodeId>>> solve_spc(const spc::SpcInstance& inst) {
  int n = inst.graph.node_count();
  std::vector<std::vector<std::vector<NodeId>>> options;
  for (const auto& pr : inst.pairs) options.push_back(shortest_paths_by_dfs(inst.graph, pr.source, pr.target));
  std::vector<int> load(n, 0);
  std::vector<std::vector<NodeId>> chosen;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == options.size()) return true;
    for (const auto& p : options[i]) {
      bool ok = true;
      for (NodeId v : p) ok = ok && load[v] < inst.c;
      if (!ok) continue;
      for (NodeId v : p) ++load[v];
      chosen.push_back(p);
      if (go(i + 1)) return true;
      chosen.pop_back();
      for (NodeId v : p) --load[v];
    }
    return false;
  };
  if (go(0)) return chosen;
  return std::nullopt;
}

bool path_is_shortest(const Graph& g, const Table& d, const std::vector<NodeId>& p) {
  if (p.empty()) return false;
  std::vector<bool> seen(g.node_count(), false);
  Weight total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[p[i]]) return false;
    seen[p[i]] = true;
    if (i == 0) continue;
    std::optional<Weight> w;
    for (const auto& e : g.edges()) {
      if (e.tail == p[i - 1] && e.head == p[i]) w = e.weight;
      if (!g.directed() && e.head == p[i - 1] && e.tail == p[i]) w = e.weight;
    }
    if (!w) return false;
    total += *w;
  }
  return total == d[p.front()][p.back()];
}

}  // namespace oracle
