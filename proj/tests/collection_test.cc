#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracles.h"
#include "spc/collection.h"
#include "spc/counterexamples.h"
#include "spc/error.h"
#include "spc/random_instances.h"
#include "spc/spc.h"

using namespace spc;

TEST(ValidatePath, FourCycle) {
  auto g = fx::d4();
  auto o = all_pairs_distances(g);
  EXPECT_TRUE(validate_path(g, o, Path({0, 1, 2})));
  EXPECT_FALSE(validate_path(g, o, Path({0, 1, 2, 3, 0})));
  EXPECT_FALSE(validate_path(g, o, Path({0, 2})));
  EXPECT_TRUE(validate_path(g, o, Path({2})));
  EXPECT_FALSE(validate_path(g, o, Path()));
}

TEST(ValidatePath, RejectsLongerWalk) {
  auto g = Graph(true, 3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  auto o = all_pairs_distances(g);
  EXPECT_FALSE(validate_path(g, o, Path({0, 1, 2})));
  EXPECT_TRUE(validate_path(g, o, Path({0, 2})));
}

TEST(Subpath, Examples) {
  Path p{0, 1, 2, 3};
  EXPECT_EQ(subpath(p, 1, 3), Path({1, 2, 3}));
  EXPECT_EQ(subpath(p, 2, 2), Path({2}));
  EXPECT_THROW(subpath(p, 3, 1), Error);
  EXPECT_THROW(subpath(p, 0, 7), Error);
}

TEST(PathQueries, OrderAndReverse) {
  Path p{4, 2, 7};
  EXPECT_TRUE(p.before(4, 7));
  EXPECT_FALSE(p.before(7, 4));
  EXPECT_FALSE(p.before(4, 4));
  EXPECT_EQ(*p.position(7), 2u);
  EXPECT_FALSE(p.position(1).has_value());
  EXPECT_EQ(p.reversed(), Path({7, 2, 4}));
  EXPECT_TRUE(p.contains_all({2, 4}));
  EXPECT_EQ(to_string(p), "4 2 7");
}

TEST(SubpathSwap, IdenticalCopies) {
  PathCollection coll({Path{0, 1, 2}, Path{0, 1, 2}});
  auto r = subpath_swap(coll, 0, 1, 0, 2);
  EXPECT_EQ(r.collection, coll);
  EXPECT_EQ(r.record, (SwapRecord{0, 1, 0, 2}));
}

TEST(SubpathSwap, Diamond) {
  using namespace fx;
  PathCollection coll({Path{A, X, B}, Path{A, Y, B}}, true);
  auto r = subpath_swap(coll, 0, 1, A, B);
  EXPECT_EQ(r.collection, PathCollection({Path{A, Y, B}, Path{A, X, B}}));
  auto g = diamond(false);
  auto o = all_pairs_distances(g);
  for (const auto& p : r.collection.paths()) EXPECT_TRUE(validate_path(g, o, p));
}

TEST(SubpathSwap, FourCycleEqualSegments) {
  PathCollection coll({Path{0, 1, 2}, Path{1, 2, 3}});
  auto r = subpath_swap(coll, 0, 1, 1, 2);
  EXPECT_EQ(r.collection, coll);
}

TEST(SubpathSwap, UndirectedOppositeOrientation) {
  // Path 1 runs b..a; its segment is reversed into path 0 and vice versa.
  using namespace fx;
  PathCollection coll({Path{A, X, B}, Path{B, Y, A}}, true);
  auto r = subpath_swap(coll, 0, 1, A, B);
  EXPECT_EQ(r.collection[0], Path({A, Y, B}));
  EXPECT_EQ(r.collection[1], Path({B, X, A}));
}

TEST(SubpathSwap, RejectsBadArguments) {
  PathCollection coll({Path{0, 1, 2}, Path{1, 2, 3}});
  EXPECT_THROW(subpath_swap(coll, 0, 0, 1, 2), Error);
  EXPECT_THROW(subpath_swap(coll, 0, 1, 2, 1), Error);
  EXPECT_THROW(subpath_swap(coll, 0, 1, 0, 2), Error);
  EXPECT_THROW(subpath_swap(coll, 0, 5, 1, 2), Error);
  // Reversed orientation only counts on undirected collections.
  PathCollection d({Path{0, 1, 2}, Path{2, 1, 0}});
  EXPECT_THROW(subpath_swap(d, 0, 1, 0, 2), Error);
}

TEST(SwapAlgebra, InvolutionAndInvariantsOnRandomCollections) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Rng rng(seed);
    bool directed = seed % 2 == 0;
    auto g = random_graph(rng, 8, directed, 0.35, 1, 3);
    auto o = all_pairs_distances(g);
    std::vector<Path> paths;
    for (int i = 0; i < 5; ++i) {
      auto pr = random_pair(rng, o);
      ASSERT_TRUE(pr);
      auto all = enumerate_shortest_paths(g, o, pr->source, pr->target, 100);
      paths.push_back(rng.pick(all.paths));
    }
    PathCollection coll(paths, !directed);
    const auto cong = congestion_map(coll);
    for (int step = 0; step < 40; ++step) {
      std::size_t p = static_cast<std::size_t>(rng.uniform(0, 4)), q = static_cast<std::size_t>(rng.uniform(0, 4));
      if (p == q) continue;
      const auto& P = coll[p];
      if (P.size() < 2) continue;
      std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(P.size()) - 2));
      std::size_t j = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(i) + 1, static_cast<std::int64_t>(P.size()) - 1));
      NodeId a = P[i], b = P[j];
      const auto& Q = coll[q];
      bool fits = Q.before(a, b) || (!directed && Q.before(b, a));
      if (!fits) continue;
      auto r = subpath_swap(coll, p, q, a, b);
      auto back = subpath_swap(r.collection, p, q, a, b);
      ASSERT_EQ(back.collection, coll);
      for (std::size_t k = 0; k < coll.size(); ++k) {
        ASSERT_EQ(r.collection.terminals(k), coll.terminals(k));
        ASSERT_TRUE(validate_path(g, o, r.collection[k]));
      }
      ASSERT_EQ(congestion_map(r.collection), cong);
      coll = r.collection;
    }
  }
}

TEST(Congestion, Counts) {
  PathCollection coll({Path{0, 1, 2}, Path{1, 2, 3}});
  auto m = congestion_map(coll);
  EXPECT_EQ(m.count(0), 1);
  EXPECT_EQ(m.count(1), 2);
  EXPECT_EQ(m.count(2), 2);
  EXPECT_EQ(m.count(3), 1);
  EXPECT_EQ(m.max(), 2);
  auto empty = congestion_map(PathCollection{});
  EXPECT_EQ(empty.count(0), 0);
  EXPECT_EQ(empty.max(), 0);
}

TEST(Congestion, MaxNodes) {
  PathCollection coll({Path{0, 1, 2}, Path{1, 2, 3}});
  EXPECT_EQ(max_congestion_nodes(coll, 2), (std::vector<NodeId>{1, 2}));
  EXPECT_THROW(max_congestion_nodes(coll, 1), Error);
  EXPECT_TRUE(max_congestion_nodes(coll, 3).empty());
}

TEST(Congestion, AppendixBSolutionIsSevenEverywhere) {
  auto inst = build_appendixB_instance(8);
  auto o = all_pairs_distances(inst.graph);
  std::vector<Path> paths;
  for (const auto& pr : inst.pairs) paths.push_back(canonical_shortest_path(inst.graph, o, pr.source, pr.target));
  PathCollection coll(paths);
  // window counting: pair i covers i..i+6, so each node is in 7 windows
  std::vector<int> windows(8, 0);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j <= 6; ++j) ++windows[(i + j) % 8];
  auto m = congestion_map(coll);
  for (int v = 0; v < 8; ++v) {
    EXPECT_EQ(m.count(v), 7);
    EXPECT_EQ(windows[v], 7);
  }
  EXPECT_EQ(max_congestion_nodes(coll, 7), (std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(Trace, FormatParseReplay) {
  PathCollection coll({Path{0, 1, 3}, Path{0, 2, 3}}, true);
  std::vector<TraceEvent> events{SwapRecord{0, 1, 0, 3}, AddRecord{Path{1, 3}}};
  auto text = format_trace(events);
  EXPECT_EQ(parse_trace(text), events);
  EXPECT_EQ(format_event(events[0]), "swap p=0 q=1 a=0 b=3");
  auto out = replay(coll, events);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0], Path({0, 2, 3}));
  EXPECT_EQ(out[2], Path({1, 3}));
  EXPECT_THROW(parse_trace("swap p=0 q=1 a=0"), Error);
}
