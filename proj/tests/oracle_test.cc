#include <gtest/gtest.h>

#include "support/fixtures.h"
#include "support/reference.h"
#include "support/structure_checks.h"
#include "vfc/errors.h"
#include "vfc/index.h"
#include "vfc/oracle.h"
#include "vfc/tools/generator.h"

namespace vfc {
namespace {

class G2Oracle : public ::testing::Test {
 protected:
  Graph g_ = Normalize(fixtures::G2());
  StaticStructure s_ = StaticStructure::Build(g_, 3);
};

TEST_F(G2Oracle, SingleFailure) {
  UpdateState st = s_.Update({3});
  ASSERT_EQ(st.components().size(), 1u);
  EXPECT_EQ(st.components()[0].root, 1);
  EXPECT_EQ(st.components()[0].boundary, (std::vector<Vertex>{3}));
  ComponentRef five = st.Locate(5);
  EXPECT_EQ(five.kind, ComponentKind::kHanging);
  EXPECT_EQ(five.root, 4);
  EXPECT_TRUE(st.Connected(2, 5));
  EXPECT_TRUE(st.Connected(4, 1));
}

TEST_F(G2Oracle, TwoFailuresJoinedThroughHangingSubtree) {
  UpdateState st = s_.Update({4, 2});
  ASSERT_EQ(st.components().size(), 2u);
  EXPECT_EQ(st.components()[0].root, 1);
  EXPECT_EQ(st.components()[0].boundary, (std::vector<Vertex>{2}));
  EXPECT_EQ(st.components()[1].root, 3);
  EXPECT_EQ(st.components()[1].boundary, (std::vector<Vertex>{4}));
  ASSERT_EQ(st.edges().size(), 1u);
  EXPECT_EQ(st.edges()[0].type, EdgeType::kType2);
  EXPECT_TRUE(st.SameClass(0, 1));
  EXPECT_TRUE(st.Connected(1, 3));
  EXPECT_TRUE(st.Connected(1, 5));
  EXPECT_TRUE(st.Connected(3, 5));
}

TEST_F(G2Oracle, RootFailed) {
  UpdateState alone = s_.Update({1});
  EXPECT_TRUE(alone.components().empty());
  EXPECT_TRUE(alone.Connected(3, 5));
  UpdateState st = s_.Update({1, 3});
  ASSERT_EQ(st.components().size(), 1u);
  EXPECT_EQ(st.components()[0].root, 2);
  EXPECT_TRUE(st.Connected(2, 4));
  UpdateState cut = s_.Update({1, 2, 3});
  EXPECT_TRUE(cut.Connected(4, 5));
  EXPECT_THROW(cut.Connected(4, 2), QueryOnFailedVertex);
}

TEST_F(G2Oracle, Separation) {
  // Removing 4 and 5's neighbours 1 and 3 isolates 5 from 2.
  UpdateState st = s_.Update({1, 3, 4});
  EXPECT_FALSE(st.Connected(2, 5));
}

TEST_F(G2Oracle, EmptyFailedSet) {
  UpdateState st = s_.Update({});
  for (Vertex x = 1; x <= 5; ++x) {
    for (Vertex y = 1; y <= 5; ++y) EXPECT_TRUE(st.Connected(x, y));
  }
}

TEST_F(G2Oracle, Contracts) {
  EXPECT_THROW(s_.Update({1, 2, 3, 4}), BudgetExceeded);
  EXPECT_NO_THROW(s_.Update({2, 2, 3, 3, 4}));
  EXPECT_THROW(s_.Update({0}), ContractViolation);
  EXPECT_THROW(s_.Update({6}), ContractViolation);
  UpdateState st = s_.Update({3});
  EXPECT_THROW(st.Connected(3, 1), QueryOnFailedVertex);
  EXPECT_THROW(st.Connected(1, 9), ContractViolation);
  EXPECT_THROW(StaticStructure::Build(g_, 0), ContractViolation);
}

TEST(StaticStructure, C4Shape) {
  StaticStructure s = StaticStructure::Build(Normalize(fixtures::C4()), 2);
  EXPECT_EQ(s.levels(), 2);
  EXPECT_EQ(s.range_index_count(), 3u);
  EXPECT_EQ(s.low().Get(2, 1), 1);
}

TEST(StaticStructure, LevelsClampedOnTinyComponents) {
  StaticStructure s = StaticStructure::Build(Normalize(fixtures::C4()), 8);
  EXPECT_EQ(s.dstar(), 8);
  EXPECT_EQ(s.levels(), 3);
  UpdateState st = s.Update({1, 3});
  EXPECT_FALSE(st.Connected(2, 4));
  EXPECT_NO_THROW(s.Update({1, 2, 3, 4}));
}

TEST(StaticStructure, SingleVertex) {
  StaticStructure s = StaticStructure::Build(Normalize(RawGraph{1, {}}), 3);
  EXPECT_EQ(s.levels(), 0);
  EXPECT_TRUE(s.Update({}).Connected(1, 1));
  UpdateState st = s.Update({1});
  EXPECT_THROW(st.Connected(1, 1), QueryOnFailedVertex);
}

TEST(StaticStructure, StructuralChecksOnRandomGraphs) {
  tools::Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = Normalize(tools::CorpusGraph(rng, 5, 40));
    int dstar = 1 + trial % 6;
    StaticStructure s = StaticStructure::Build(g, dstar);
    std::uniform_int_distribution<Vertex> pick(1, s.n());
    for (int set = 0; set < 15; ++set) {
      std::vector<Vertex> failed;
      int size = std::uniform_int_distribution<int>(0, dstar)(rng);
      while (static_cast<int>(failed.size()) < size) {
        Vertex v = pick(rng);
        if (std::find(failed.begin(), failed.end(), v) == failed.end()) failed.push_back(v);
      }
      std::sort(failed.begin(), failed.end());
      UpdateState st = s.Update(failed);
      checks::Census c = checks::Take(s, failed);
      ASSERT_EQ(checks::CheckComponentFacts(s, g, c), "");
      ASSERT_EQ(checks::CheckEngine(st, g, c), "");
    }
  }
}

TEST(StaticStructure, ResizeMatchesRebuild) {
  tools::Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = Normalize(tools::CorpusGraph(rng, 5, 60));
    StaticStructure two = StaticStructure::Build(g, 2);
    StaticStructure six = StaticStructure::Build(g, 6);
    StaticStructure grown = two.Resized(6);
    StaticStructure shrunk = six.Resized(2);
    ASSERT_EQ(grown.levels(), six.levels());
    ASSERT_EQ(shrunk.levels(), two.levels());
    for (Vertex v = 1; v <= g.n(); ++v) {
      for (int k = 1; k <= six.levels(); ++k) {
        ASSERT_EQ(grown.low().Get(v, k), six.low().Get(v, k));
        ASSERT_EQ(grown.reordered(k).number(v), six.reordered(k).number(v));
      }
    }
    std::uniform_int_distribution<Vertex> pick(1, g.n());
    for (int probe = 0; probe < 50; ++probe) {
      std::vector<Vertex> failed{pick(rng), pick(rng)};
      UpdateState a = grown.Update(failed);
      UpdateState b = six.Update(failed);
      UpdateState c = shrunk.Update(failed);
      UpdateState d = two.Update(failed);
      Vertex x = pick(rng), y = pick(rng);
      if (a.IsFailed(x) || a.IsFailed(y)) continue;
      EXPECT_EQ(a.Connected(x, y), b.Connected(x, y));
      EXPECT_EQ(c.Connected(x, y), d.Connected(x, y));
    }
  }
}

TEST(Index, SeveralComponents) {
  // Triangle 1-2-3, path 4-5-6 and the isolated vertex 7.
  Graph g = Normalize(RawGraph{7, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}}});
  Index index = Index::Build(g, 2);
  EXPECT_EQ(index.component_count(), 3);
  EXPECT_EQ(index.m(), 5u);
  std::vector<NodeId> failed{4};
  FailureOracle oracle = index.Update(failed);
  EXPECT_FALSE(oracle.Connected(0, 5));
  EXPECT_FALSE(oracle.Connected(2, 6));
  EXPECT_TRUE(oracle.Connected(0, 2));
  EXPECT_FALSE(oracle.Connected(3, 5));
  EXPECT_TRUE(oracle.Connected(6, 6));
  EXPECT_EQ(oracle.state(0), nullptr);
  ASSERT_NE(oracle.state(1), nullptr);
  EXPECT_THROW(oracle.Connected(4, 0), QueryOnFailedVertex);
  EXPECT_THROW(oracle.Connected(0, 7), ContractViolation);
  std::vector<NodeId> too_many{0, 1, 2};
  EXPECT_THROW(index.Update(too_many), BudgetExceeded);
  std::vector<NodeId> unknown{9};
  EXPECT_THROW(index.Update(unknown), ContractViolation);
}

TEST(Index, NumberingRoundTrip) {
  Graph g = Normalize(fixtures::G2());
  Index index = Index::Build(g, 1);
  for (NodeId u = 0; u < 5; ++u) {
    EXPECT_EQ(index.node(index.component_of(u), index.dfs_number(u)), u);
  }
}

}  // namespace
}  // namespace vfc
