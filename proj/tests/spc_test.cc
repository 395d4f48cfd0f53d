#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.h"
#include "oracles.h"
#include "spc/counterexamples.h"
#include "spc/error.h"
#include "spc/random_instances.h"
#include "spc/spc.h"

using namespace spc;

namespace {

SpcSolution clockwise_solution(const SpcInstance& inst) {
  auto o = all_pairs_distances(inst.graph);
  std::vector<Path> paths;
  for (const auto& pr : inst.pairs) paths.push_back(canonical_shortest_path(inst.graph, o, pr.source, pr.target));
  return SpcSolution{PathCollection(paths)};
}

std::vector<std::vector<NodeId>> node_lists(const PathCollection& c) {
  std::vector<std::vector<NodeId>> out;
  for (const auto& p : c.paths()) out.push_back(p.nodes());
  return out;
}

}  // namespace

TEST(CheckInstance, Rejects) {
  auto g = fx::chain3();
  auto o = all_pairs_distances(g);
  EXPECT_THROW(check_instance(SpcInstance{g, {{0, 2}}, 2}, o), Error);
  EXPECT_THROW(check_instance(SpcInstance{g, {{0, 2}}, 0}, o), Error);
  EXPECT_THROW(check_instance(SpcInstance{g, {{2, 0}}, 1}, o), Error);
  EXPECT_THROW(check_instance(SpcInstance{g, {{0, 5}}, 1}, o), Error);
  EXPECT_NO_THROW(check_instance(SpcInstance{g, {{0, 2}}, 1}, o));
}

TEST(ValidateSolution, AppendixB) {
  auto inst = build_appendixB_instance(8);
  auto o = all_pairs_distances(inst.graph);
  auto sol = clockwise_solution(inst);
  EXPECT_TRUE(validate_solution(inst, o, sol).ok());
  inst.c = 6;
  auto rep = validate_solution(inst, o, sol);
  std::vector<NodeId> over;
  for (const auto& v : rep.violations) {
    EXPECT_EQ(v.kind, Violation::Kind::kCongestion);
    over.push_back(v.node);
  }
  std::sort(over.begin(), over.end());
  EXPECT_EQ(over, (std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(ValidateSolution, SinglePairAndMistakes) {
  auto g = fx::d4();
  auto o = all_pairs_distances(g);
  SpcInstance inst{g, {{0, 2}}, 1};
  EXPECT_TRUE(validate_solution(inst, o, SpcSolution{PathCollection({canonical_shortest_path(g, o, 0, 2)})}).ok());
  auto wrong = validate_solution(inst, o, SpcSolution{PathCollection({Path{1, 2}})});
  ASSERT_FALSE(wrong.ok());
  EXPECT_EQ(wrong.violations[0].kind, Violation::Kind::kWrongTerminal);
  auto count = validate_solution(inst, o, SpcSolution{PathCollection{}});
  ASSERT_FALSE(count.ok());
  EXPECT_EQ(count.violations[0].kind, Violation::Kind::kCountMismatch);
  SpcInstance loop{g, {{0, 3}}, 1};
  auto bad = validate_solution(loop, o, SpcSolution{PathCollection({Path{0, 1, 2, 3, 0, 1}})});
  EXPECT_FALSE(bad.ok());
}

TEST(Enumerate, Examples) {
  auto g = fx::d4();
  auto o = all_pairs_distances(g);
  auto e = enumerate_shortest_paths(g, o, 0, 2, 100);
  EXPECT_EQ(e.paths, (std::vector<Path>{Path{0, 1, 2}}));
  EXPECT_FALSE(e.overflow);
  auto c = fx::c4();
  auto oc = all_pairs_distances(c);
  auto ec = enumerate_shortest_paths(c, oc, 0, 2, 100);
  EXPECT_EQ(ec.paths, (std::vector<Path>{Path{0, 1, 2}, Path{0, 3, 2}}));
  EXPECT_EQ(enumerate_shortest_paths(g, o, 1, 1, 10).paths, (std::vector<Path>{Path{1}}));
  auto capped = enumerate_shortest_paths(c, oc, 0, 2, 1);
  EXPECT_EQ(capped.paths.size(), 1u);
  EXPECT_TRUE(capped.overflow);
}

TEST(Enumerate, MatchesDfsAndPathCount) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(seed);
    int n = static_cast<int>(rng.uniform(2, 8));
    auto g = random_graph(rng, n, seed % 3 == 0, 0.4, 1, 2);
    auto o = all_pairs_distances(g);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        auto mine = enumerate_shortest_paths(g, o, s, t, 100000);
        auto ref = oracle::shortest_paths_by_dfs(g, s, t);
        std::vector<std::vector<NodeId>> got;
        for (const auto& p : mine.paths) {
          ASSERT_TRUE(validate_path(g, o, p));
          got.push_back(p.nodes());
        }
        ASSERT_EQ(got, ref) << "seed " << seed << " pair " << s << "," << t;
        ASSERT_EQ(count_shortest_paths(g, o, s, t), ref.size());
      }
  }
}

TEST(BruteForce, AppendixBUniqueSolution) {
  auto inst = build_appendixB_instance(8);
  auto o = all_pairs_distances(inst.graph);
  auto out = brute_force_spc(inst, o);
  ASSERT_EQ(out.status, SolveStatus::kSolved);
  EXPECT_EQ(out.solution->paths, clockwise_solution(inst).paths);
}

TEST(BruteForce, FourCycleDisjointIsInfeasible) {
  auto g = fx::d4();
  auto o = all_pairs_distances(g);
  SpcInstance inst{g, {{0, 2}, {1, 3}}, 1};
  EXPECT_EQ(brute_force_spc(inst, o).status, SolveStatus::kInfeasible);
  inst.c = 2;
  EXPECT_EQ(brute_force_spc(inst, o).status, SolveStatus::kSolved);
}

TEST(BruteForce, SinglePairGivesCanonicalPath) {
  auto g = fx::c4();
  auto o = all_pairs_distances(g);
  auto out = brute_force_spc(SpcInstance{g, {{0, 2}}, 1}, o);
  ASSERT_EQ(out.status, SolveStatus::kSolved);
  EXPECT_EQ(out.solution->paths[0], canonical_shortest_path(g, o, 0, 2));
}

TEST(BruteForce, BudgetIsItsOwnOutcome) {
  auto inst = build_appendixB_instance(8);
  inst.c = 6;
  auto o = all_pairs_distances(inst.graph);
  SearchLimits lim;
  lim.expansion_budget = 3;
  EXPECT_EQ(brute_force_spc(inst, o, lim).status, SolveStatus::kBudgetExceeded);
}

TEST(BruteForce, AgreesWithRecursiveEnumerator) {
  int solved = 0, infeasible = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Rng rng(seed);
    int n = static_cast<int>(rng.uniform(3, 8));
    bool directed = rng.chance(0.5);
    auto g = random_graph(rng, n, directed, 0.3, 1, 3);
    auto o = all_pairs_distances(g);
    int k = static_cast<int>(rng.uniform(1, 3));
    std::vector<TerminalPair> pairs;
    for (int i = 0; i < k; ++i) pairs.push_back(*random_pair(rng, o));
    SpcInstance inst{g, pairs, static_cast<int>(rng.uniform(1, k))};
    auto out = brute_force_spc(inst, o);
    auto ref = oracle::solve_spc(inst);
    ASSERT_NE(out.status, SolveStatus::kBudgetExceeded);
    ASSERT_EQ(out.status == SolveStatus::kSolved, ref.has_value()) << "seed " << seed;
    if (ref) {
      ++solved;
      ASSERT_TRUE(validate_solution(inst, o, *out.solution).ok());
      auto load = oracle::recount(n, node_lists(out.solution->paths));
      for (int x : load) ASSERT_LE(x, inst.c);
    } else {
      ++infeasible;
    }
  }
  EXPECT_GT(solved, 0);
  EXPECT_GT(infeasible, 0);
}

TEST(KeyProperty, Examples) {
  auto inst = build_appendixB_instance(8);
  auto sol = clockwise_solution(inst);
  EXPECT_TRUE(key_property_check(sol.paths, {0, 1, 2, 3, 4, 5, 6, 7}, 3).holds);
  PathCollection coll({Path{0, 1, 2}, Path{1, 2, 3}});
  auto r = key_property_check(coll, {0, 3}, 2);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.failing_subset, (std::vector<NodeId>{0, 3}));
  EXPECT_TRUE(key_property_check(coll, {}, 4).holds);
}

// With k > N*d every N max-congestion nodes share a path: each of them misses
// at most d paths.
TEST(KeyProperty, HoldsWheneverPairsOutnumberSlack) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 300 && checked < 60; ++seed) {
    Rng rng(seed);
    int n = static_cast<int>(rng.uniform(4, 8));
    auto g = random_graph(rng, n, seed % 2 == 0, 0.3, 1, 3);
    auto o = all_pairs_distances(g);
    int N = static_cast<int>(rng.uniform(2, 4));
    int d = static_cast<int>(rng.uniform(0, 1));
    int k = N * d + static_cast<int>(rng.uniform(1, 2));
    auto pairs = overlapping_pairs(rng, g, o, k, k / 2 + 1);
    SpcInstance inst{g, pairs, k - d};
    auto out = brute_force_spc(inst, o);
    if (out.status != SolveStatus::kSolved) continue;
    ++checked;
    auto W = max_congestion_nodes(out.solution->paths, inst.c);
    EXPECT_TRUE(key_property_check(out.solution->paths, W, N).holds) << "seed " << seed;
  }
  EXPECT_GE(checked, 30);
}

TEST(Subsets, LexicographicAndEarlyStop) {
  std::vector<std::vector<NodeId>> seen;
  bool stopped = for_each_subset({1, 2, 3, 4}, 2, [&](const std::vector<NodeId>& s) {
    seen.push_back(s);
    return seen.size() == 3;
  });
  EXPECT_TRUE(stopped);
  EXPECT_EQ(seen, (std::vector<std::vector<NodeId>>{{1, 2}, {1, 3}, {1, 4}}));
  int count = 0;
  for_each_subset({0, 1, 2, 3, 4, 5}, 3, [&](const std::vector<NodeId>&) {
    ++count;
    return false;
  });
  EXPECT_EQ(count, 20);
}
