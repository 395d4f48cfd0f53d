#ifndef SPC_TESTS_ORACLES_H_
#define SPC_TESTS_ORACLES_H_

// Slow reference implementations that share no code with the library.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spc/graph.h"
#include "spc/spc.h"

namespace oracle {

using spc::Graph;
using spc::NodeId;
using spc::Weight;

inline constexpr Weight kInf = spc::kUnreachable;

// dist[u][v], kInf when unreachable.
using Table = std::vector<std::vector<Weight>>;

Table floyd_warshall(const Graph& g);
Table bellman_ford(const Graph& g);

// Every simple s->t path found by plain DFS over the edge list, then filtered
// to those of minimum weight. Sorted lexicographically.
std::vector<std::vector<NodeId>> shortest_paths_by_dfs(const Graph& g, NodeId s, NodeId t);

// Recursive search over all assignments of DFS-enumerated shortest paths.
// Returns one feasible assignment or nullopt.
std::optional<std::vector<std::vector<NodeId>>> solve_spc(const spc::SpcInstance& inst);

// Congestion recount straight from node lists.
std::vector<int> recount(int n, const std::vector<std::vector<NodeId>>& paths);

bool path_is_shortest(const Graph& g, const Table& d, const std::vector<NodeId>& p);

}  // namespace oracle

#endif  // SPC_TESTS_ORACLES_H_
