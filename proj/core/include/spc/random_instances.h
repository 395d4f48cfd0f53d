#ifndef SPC_RANDOM_INSTANCES_H_
#define SPC_RANDOM_INSTANCES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "spc/graph.h"
#include "spc/spc.h"

namespace spc {

// mt19937_64 with reductions written out, so sequences do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(double p);
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
    }
  }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

// Seed of trial i in a campaign seeded with `seed` (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i);

// A random spanning cycle (undirected: a Hamiltonian cycle; directed: a
// directed one) keeps the graph connected, then every other pair gets an edge
// with probability p. Weights are uniform in [wmin, wmax].
Graph random_graph(std::uint64_t seed, int n, bool directed, double p, Weight wmin, Weight wmax);
Graph random_graph(Rng& rng, int n, bool directed, double p, Weight wmin, Weight wmax);

// DAG over a random topological order: a Hamiltonian chain plus each forward
// pair with probability p.
Graph random_dag(Rng& rng, int n, double p, Weight wmin, Weight wmax);

// Pairs whose shortest paths overlap: k_spine pairs straddle the middle of a
// long shortest path, the rest are random reachable pairs.
std::vector<TerminalPair> overlapping_pairs(Rng& rng, const Graph& graph,
                                            const DistanceOracle& oracle, int k, int k_spine);

// Uniformly random reachable pair with s != t, if any.
std::optional<TerminalPair> random_pair(Rng& rng, const DistanceOracle& oracle);

}  // namespace spc

#endif  // SPC_RANDOM_INSTANCES_H_
