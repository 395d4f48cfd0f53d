#include <gtest/gtest.h>

#include "fixtures.h"
#include "spc/campaign.h"
#include "spc/dot.h"
#include "spc/error.h"
#include "spc/random_instances.h"
#include "spc/text_format.h"

using namespace spc;

// Frozen output of random_graph(seed=1, n=6, undirected, p=0.5, w in [1,9]).
TEST(RandomGraph, FrozenFixture) {
  auto g = random_graph(1, 6, false, 0.5, 1, 9);
  const Graph expected(false, 6, {{1, 3, 7}, {3, 0, 3}, {0, 4, 1}, {4, 5, 6}, {5, 2, 5}, {2, 1, 3},
                                  {0, 5, 3}, {1, 4, 5}, {2, 3, 3}, {2, 4, 5}, {3, 4, 7}, {3, 5, 7}});
  EXPECT_EQ(g, expected);
}

TEST(RandomGraph, SingleNodeAndComplete) {
  auto one = random_graph(7, 1, false, 0.5, 1, 9);
  EXPECT_EQ(one.node_count(), 1);
  EXPECT_TRUE(one.edges().empty());
  auto full = random_graph(7, 6, false, 1.0, 1, 1);
  EXPECT_EQ(full.edges().size(), 15u);
  auto o = all_pairs_distances(full);
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v) EXPECT_EQ(o.dist(u, v), u == v ? 0 : 1);
}

TEST(RandomGraph, ConnectedAndDeterministic) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    for (bool directed : {false, true}) {
      auto g = random_graph(seed, 9, directed, 0.1, 1, 9);
      EXPECT_EQ(g, random_graph(seed, 9, directed, 0.1, 1, 9));
      auto o = all_pairs_distances(g);
      for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v) ASSERT_TRUE(o.reachable(u, v));
    }
  }
}

TEST(RandomDag, IsAcyclic) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(seed);
    auto g = random_dag(rng, 10, 0.3, 1, 9);
    EXPECT_TRUE(topological_order(g).has_value());
  }
}

TEST(Rng, UniformStaysInRange) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto x = rng.uniform(-2, 5);
    ASSERT_GE(x, -2);
    ASSERT_LE(x, 5);
  }
  EXPECT_THROW(rng.uniform(2, 1), Error);
  EXPECT_NE(derive_seed(42, 0), derive_seed(42, 1));
  EXPECT_EQ(derive_seed(42, 9), derive_seed(42, 9));
}

TEST(TextFormat, GraphRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = random_graph(seed, 7, seed % 2 == 0, 0.3, 1, 50);
    EXPECT_EQ(parse_graph(render_graph(g)), g);
  }
}

TEST(TextFormat, InstanceRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(seed);
    auto g = random_graph(rng, 6, seed % 2 == 1, 0.3, 1, 9);
    auto o = all_pairs_distances(g);
    SpcInstance inst{g, {*random_pair(rng, o), *random_pair(rng, o)}, 2};
    EXPECT_EQ(parse_instance(render_instance(inst)), inst);
  }
}

TEST(TextFormat, CommentsAndErrors) {
  auto g = parse_graph("# four cycle\ndirected 4 4\n0 1 1\n\n1 2 1\n2 3 1\n3 0 1\n");
  EXPECT_EQ(g, fx::d4());
  auto expect_parse_error = [](const std::string& text) {
    try {
      parse_graph(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::kParse || e.code() == ErrorCode::kInvalidArgument) << text;
    }
  };
  expect_parse_error("");
  expect_parse_error("sideways 2 1\n0 1 1\n");
  expect_parse_error("directed 2 2\n0 1 1\n");
  expect_parse_error("directed 2 1\n0 1 x\n");
  expect_parse_error("directed 2 1\n0 1 0\n");
  EXPECT_THROW(parse_instance("directed 2 1\n0 1 1\npairs 2 1\n0 1\n"), Error);
}

TEST(TextFormat, PathsAndNodeLists) {
  auto paths = parse_paths("0 1 2\n# skip\n3 4\n");
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[1], Path({3, 4}));
  EXPECT_EQ(parse_paths(render_paths(paths)), paths);
  EXPECT_EQ(parse_node_list("1,2,3"), (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(parse_node_list("4 5"), (std::vector<NodeId>{4, 5}));
}

TEST(Dot, MarksAndColours) {
  auto dot = export_dot(fx::c4(), PathCollection({Path{0, 1, 2}}), {1});
  EXPECT_EQ(dot.rfind("graph spc {", 0), 0u);
  EXPECT_NE(dot.find("1 [label=\"1\", shape=doublecircle]"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1 [color="), std::string::npos);
  EXPECT_NE(dot.find("label=\"P0\""), std::string::npos);
  auto directed = export_dot(fx::d4(), PathCollection{});
  EXPECT_EQ(directed.rfind("digraph", 0), 0u);
  EXPECT_EQ(directed.find("doublecircle"), std::string::npos);
}

TEST(Campaign, NamesAndAliases) {
  EXPECT_EQ(parse_campaign_kind("dag"), CampaignKind::kDagMerge);
  EXPECT_EQ(parse_campaign_kind("undirected-merge"), CampaignKind::kUndirectedMerge);
  EXPECT_EQ(parse_campaign_kind("directed"), CampaignKind::kDirectedRoundtrip);
  EXPECT_EQ(parse_campaign_kind("segments"), CampaignKind::kSegmentLemma);
  EXPECT_EQ(parse_campaign_kind("cycle-lemma"), CampaignKind::kCycleLemma);
  EXPECT_EQ(parse_campaign_kind("reduction"), CampaignKind::kReductionEquivalence);
  EXPECT_FALSE(parse_campaign_kind("nonsense").has_value());
  for (auto k : {CampaignKind::kDagMerge, CampaignKind::kSwapAlgebra, CampaignKind::kDagDsp})
    EXPECT_EQ(parse_campaign_kind(campaign_name(k)), k);
}

TEST(Campaign, ThreadCountDoesNotChangeVerdicts) {
  for (auto kind : {CampaignKind::kUndirectedMerge, CampaignKind::kSegmentLemma,
                    CampaignKind::kDirectedRoundtrip, CampaignKind::kSwapAlgebra}) {
    auto cfg = default_campaign(kind);
    cfg.trials = 12;
    cfg.threads = 1;
    auto one = run_campaign(cfg);
    cfg.threads = 4;
    auto many = run_campaign(cfg);
    ASSERT_EQ(one.verdicts.size(), many.verdicts.size());
    for (std::size_t i = 0; i < one.verdicts.size(); ++i) {
      EXPECT_EQ(render_verdict(one.verdicts[i]), render_verdict(many.verdicts[i]));
      EXPECT_EQ(one.verdicts[i].stats, many.verdicts[i].stats);
    }
    EXPECT_EQ(one.failures(), 0u) << render_campaign(one);
  }
}

TEST(Campaign, SingleTrialReproducesCampaignVerdict) {
  auto cfg = default_campaign(CampaignKind::kDagMerge);
  cfg.trials = 6;
  auto all = run_campaign(cfg);
  auto v = run_trial(cfg, 4);
  EXPECT_EQ(render_verdict(v), render_verdict(all.verdicts[4]));
  EXPECT_EQ(v.seed, derive_seed(cfg.seed, 4));
}

TEST(Campaign, CycleOrderLemmaHolds) {
  auto res = run_campaign(default_campaign(CampaignKind::kCycleLemma));
  EXPECT_EQ(res.verdicts.size(), 200u);
  EXPECT_EQ(res.failures(), 0u) << render_campaign(res);
  EXPECT_GT(res.stats()["configurations"], 0) << render_campaign(res);
}

TEST(Campaign, DagDspMatchesBruteForce) {
  auto res = run_campaign(default_campaign(CampaignKind::kDagDsp));
  EXPECT_EQ(res.verdicts.size(), 100u);
  EXPECT_EQ(res.failures(), 0u) << render_campaign(res);
}
