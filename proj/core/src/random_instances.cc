#include "spc/random_instances.h"

#include <algorithm>
#include <set>

#include "spc/error.h"

namespace spc {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  return lo + static_cast<std::int64_t>(next() % span);
}

bool Rng::chance(double p) {
  const double u = static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
  return u < p;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph random_graph(std::uint64_t seed, int n, bool directed, double p, Weight wmin, Weight wmax) {
  Rng rng(seed);
  return random_graph(rng, n, directed, p, wmin, wmax);
}

Graph random_graph(Rng& rng, int n, bool directed, double p, Weight wmin, Weight wmax) {
  if (n < 1 || wmin < 1 || wmax < wmin || p < 0 || p > 1) {
    throw Error(ErrorCode::kInvalidArgument, "bad random graph parameters");
  }
  std::vector<NodeId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::set<std::pair<NodeId, NodeId>> used;
  std::vector<Edge> edges;
  auto add = [&](NodeId u, NodeId v) {
    auto key = directed ? std::make_pair(u, v) : std::make_pair(std::min(u, v), std::max(u, v));
    if (u == v || !used.insert(key).second) return;
    edges.push_back({u, v, rng.uniform(wmin, wmax)});
  };
  if (n >= 2) {
    for (int i = 0; i < n; ++i) add(order[i], order[(i + 1) % n]);
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      if (used.count({u, v})) continue;
      if (rng.chance(p)) add(u, v);
    }
  }
  return Graph(directed, n, std::move(edges));
}

Graph random_dag(Rng& rng, int n, double p, Weight wmin, Weight wmax) {
  if (n < 1 || wmin < 1 || wmax < wmin) throw Error(ErrorCode::kInvalidArgument, "bad DAG parameters");
  std::vector<NodeId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({order[i], order[i + 1], rng.uniform(wmin, wmax)});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (rng.chance(p)) edges.push_back({order[i], order[j], rng.uniform(wmin, wmax)});
    }
  }
  return Graph(true, n, std::move(edges));
}

std::optional<TerminalPair> random_pair(Rng& rng, const DistanceOracle& oracle) {
  std::vector<TerminalPair> options;
  for (NodeId s = 0; s < oracle.node_count(); ++s) {
    for (NodeId t = 0; t < oracle.node_count(); ++t) {
      if (s != t && oracle.reachable(s, t)) options.push_back({s, t});
    }
  }
  if (options.empty()) return std::nullopt;
  return rng.pick(options);
}

std::vector<TerminalPair> overlapping_pairs(Rng& rng, const Graph& graph,
                                            const DistanceOracle& oracle, int k, int k_spine) {
  // The spine is the canonical path of a pair at maximum hop-weighted distance.
  TerminalPair far{0, 0};
  Weight best = -1;
  for (NodeId s = 0; s < graph.node_count(); ++s) {
    for (NodeId t = 0; t < graph.node_count(); ++t) {
      Weight d = oracle.dist(s, t);
      if (s != t && d != kUnreachable && d > best) {
        best = d;
        far = {s, t};
      }
    }
  }
  std::vector<TerminalPair> pairs;
  if (best < 0) return pairs;
  Path spine = canonical_shortest_path(graph, oracle, far.source, far.target);
  const std::int64_t len = static_cast<std::int64_t>(spine.size());
  const std::int64_t mid = len / 2;
  for (int i = 0; i < k; ++i) {
    if (i < k_spine && len >= 2) {
      std::int64_t lo = rng.uniform(0, std::max<std::int64_t>(0, mid - 1));
      std::int64_t hi = rng.uniform(std::min(mid, len - 1), len - 1);
      if (lo == hi) hi = std::min(len - 1, hi + 1);
      pairs.push_back({spine[lo], spine[hi]});
    } else if (auto pr = random_pair(rng, oracle)) {
      pairs.push_back(*pr);
    } else {
      pairs.push_back({spine.front(), spine.back()});
    }
  }
  return pairs;
}

}  // namespace spc
