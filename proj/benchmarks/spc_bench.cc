#include <benchmark/benchmark.h>

#include "spc/counterexamples.h"
#include "spc/random_instances.h"
#include "spc/reduction.h"
#include "spc/roundtrip.h"
#include "spc/spc.h"

using namespace spc;

static void BM_AllPairs(benchmark::State& state) {
  auto g = random_graph(1, static_cast<int>(state.range(0)), true, 0.2, 1, 9);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllPairs)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void BM_BruteForceAppendixB(benchmark::State& state) {
  auto inst = build_appendixB_instance(static_cast<int>(state.range(0)));
  auto o = all_pairs_distances(inst.graph);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_spc(inst, o));
}
BENCHMARK(BM_BruteForceAppendixB)->Arg(8)->Arg(12)->Arg(16);

static void BM_DagDsp(benchmark::State& state) {
  Rng rng(7);
  int n = static_cast<int>(state.range(0));
  auto g = random_dag(rng, n, 0.3, 1, 3);
  auto o = all_pairs_distances(g);
  std::vector<TerminalPair> pairs;
  for (int i = 0; i < 3; ++i) pairs.push_back(*random_pair(rng, o));
  SpcInstance inst{g, pairs, 1};
  for (auto _ : state) benchmark::DoNotOptimize(dag_dsp(inst, o));
}
BENCHMARK(BM_DagDsp)->Arg(10)->Arg(20)->Arg(40);

static void BM_ReductionUndirected(benchmark::State& state) {
  Rng rng(11);
  auto g = random_graph(rng, 10, false, 0.3, 1, 3);
  auto o = all_pairs_distances(g);
  auto pairs = overlapping_pairs(rng, g, o, 6, 3);
  SpcInstance inst{g, pairs, 5};
  for (auto _ : state) benchmark::DoNotOptimize(spc_via_dsp_reduction(inst, o, DspBackend::kBrute));
}
BENCHMARK(BM_ReductionUndirected);

static void BM_LocalPreconditionB16(benchmark::State& state) {
  auto g = build_bidirectional_cycle(16, 11);
  auto o = all_pairs_distances(g);
  std::vector<NodeId> all;
  for (int v = 0; v < 16; ++v) all.push_back(v);
  for (auto _ : state) benchmark::DoNotOptimize(verify_local_precondition(o, 11, all));
}
BENCHMARK(BM_LocalPreconditionB16)->Unit(benchmark::kMillisecond);

static void BM_RoundtripB16(benchmark::State& state) {
  auto g = build_bidirectional_cycle(16, 11);
  auto o = all_pairs_distances(g);
  std::vector<NodeId> all;
  for (int v = 0; v < 16; ++v) all.push_back(v);
  for (auto _ : state) {
    TheoremSupplier sup(g, o);
    benchmark::DoNotOptimize(roundtrip_cover(g, o, PathCollection{}, all, sup));
  }
}
BENCHMARK(BM_RoundtripB16)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
