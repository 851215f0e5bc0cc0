#include <gtest/gtest.h>

#include <cmath>

#include "dpgh/applications.hpp"
#include "dpgh/exact_cuts.hpp"
#include "dpgh/generators.hpp"
#include "dpgh/gh_private.hpp"
#include "oracles.hpp"

using namespace dpgh;

namespace {

constexpr VertexId a = 0, b = 1, c = 2;

SteinerTree path_tree() {
  SteinerTree t;
  t.terminals = VertexSet{a, b, c};
  t.edges = {{a, b, 2.0}, {b, c, 7.0}};
  t.assignment = {{a, a}, {b, b}, {c, c}};
  return t;
}

void expect_valid_partition(const Graph& g, const KCutSolution& s, std::size_t k) {
  ASSERT_EQ(s.partition.size(), k);
  VertexSet seen;
  for (const VertexSet& part : s.partition) {
    EXPECT_FALSE(part.empty());
    EXPECT_TRUE(part.disjoint_from(seen));
    seen = seen.united(part);
  }
  EXPECT_EQ(seen, g.vertices());
  EXPECT_EQ(s.value, partition_weight(g, s.partition));
}

}  // namespace

TEST(TreeQuery, PathTree) {
  const Graph g({a, b, c}, {{a, b, 2}, {b, c, 7}});
  const TreeQueryResult q = tree_query(path_tree(), g, a, c);
  EXPECT_DOUBLE_EQ(q.tree_value, 2.0);
  EXPECT_EQ(q.cut.side, (VertexSet{a}));
  EXPECT_DOUBLE_EQ(q.cut.value, 2.0);
}

TEST(TreeQuery, SymmetricWithComplementarySides) {
  const Graph g = oracle::random_graph(9, 0.5, 6, 41);
  const SteinerTree tree = gomory_hu_exact(g);
  for (VertexId u = 0; u < 9; ++u) {
    for (VertexId v = u + 1; v < 9; ++v) {
      const TreeQueryResult uv = tree_query(tree, g, u, v);
      const TreeQueryResult vu = tree_query(tree, g, v, u);
      EXPECT_EQ(uv.tree_value, vu.tree_value);
      if (uv.cut.side.size() + vu.cut.side.size() == g.num_vertices()) {
        EXPECT_EQ(uv.cut.side, g.vertices().minus(vu.cut.side));
      }
    }
  }
}

TEST(TreeQuery, TiesGoToEdgeNearestU) {
  SteinerTree t = path_tree();
  t.edges[1].weight = 2.0;
  const Graph g({a, b, c}, {{a, b, 2}, {b, c, 2}});
  EXPECT_EQ(tree_query(t, g, a, c).cut.side, (VertexSet{a}));
  EXPECT_EQ(tree_query(t, g, c, a).cut.side, (VertexSet{c}));
}

TEST(TreeQuery, ExactCycleAndErrors) {
  const Graph g = cycle_graph(4);
  const SteinerTree tree = gomory_hu_exact(g);
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = 0; v < 4; ++v) {
      if (u != v) EXPECT_DOUBLE_EQ(tree_query(tree, g, u, v).tree_value, 2.0);
    }
  }
  EXPECT_THROW(tree_query(tree, g, 1, 1), std::domain_error);
  EXPECT_THROW(tree_query(tree, g, 1, 9), std::domain_error);
}

TEST(PathMinimumEdges, MatchesTreeQuery) {
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(10, 0.4, 5, 4000 + trial);
    Rng rng(trial);
    const SteinerTree tree = final_gh_tree(g, Epsilon(1.0), rng).tree;
    const auto weights = tree_edge_cut_weights(tree, g);
    const auto pairs = path_minimum_edges(tree);
    EXPECT_EQ(pairs.size(), 45u);
    for (const PairEdge& p : pairs) {
      const TreeQueryResult q = tree_query(tree, g, p.u, p.v);
      EXPECT_EQ(q.tree_value, tree.edges[p.edge].weight);
      EXPECT_DOUBLE_EQ(q.cut.value, weights[p.edge]);
      EXPECT_TRUE(q.cut.side.contains(p.u));
      EXPECT_FALSE(q.cut.side.contains(p.v));
    }
  }
}

TEST(GlobalMinCut, Dumbbell) {
  const Graph g = dumbbell(3, 10, 1);
  const TreeQueryResult r = global_min_cut(gomory_hu_exact(g), g);
  EXPECT_DOUBLE_EQ(r.tree_value, 1.0);
  EXPECT_TRUE(r.cut.side == (VertexSet{0, 1, 2}) || r.cut.side == (VertexSet{3, 4, 5}));
  EXPECT_THROW(global_min_cut(single_node_tree(0, g.vertices()), g), std::domain_error);
}

TEST(GlobalMinCut, NoiselessPipelineMatchesBruteForce) {
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(3 + trial % 8, 0.5, 9, 4100 + trial);
    Rng rng(trial);
    const SteinerTree tree = final_gh_tree(g, Epsilon::infinite(), rng).tree;
    const TreeQueryResult r = global_min_cut(tree, g);
    const double brute = oracle::CutTable(g).global_min();
    EXPECT_NEAR(r.tree_value, brute, 1e-9);
    EXPECT_NEAR(r.cut.value, brute, 1e-9);
    double smallest = INFINITY;
    for (const PairEdge& p : path_minimum_edges(tree)) {
      smallest = std::min(smallest, tree.edges[p.edge].weight);
    }
    EXPECT_EQ(r.tree_value, smallest);
  }
}

TEST(MinKCut, AllSingletons) {
  const Graph g = oracle::random_graph(7, 0.6, 5, 9);
  const KCutSolution s = min_k_cut(gomory_hu_exact(g), g, 7);
  expect_valid_partition(g, s, 7);
  EXPECT_DOUBLE_EQ(s.value, g.total_weight());
}

TEST(MinKCut, DumbbellBridge) {
  const Graph g = dumbbell(3, 10, 1);
  const KCutSolution s = min_k_cut(gomory_hu_exact(g), g, 2);
  expect_valid_partition(g, s, 2);
  EXPECT_DOUBLE_EQ(s.value, 1.0);
  EXPECT_DOUBLE_EQ(s.value, oracle::min_k_cut(g, 2));
}

TEST(MinKCut, WithinTwiceOptimum) {
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 6, 0.6, 9, 4200 + trial);
    for (std::size_t k : {2u, 3u}) {
      const KCutSolution s = min_k_cut(gomory_hu_exact(g), g, k);
      expect_valid_partition(g, s, k);
      EXPECT_LE(s.value, 2.0 * oracle::min_k_cut(g, k) + 1e-9);
    }
  }
}

TEST(MinKCut, DisconnectedGraph) {
  const Graph g({0, 1, 2, 3, 4, 5}, {{0, 1, 1}, {2, 3, 1}, {4, 5, 1}});
  const KCutSolution s = min_k_cut(gomory_hu_exact(g), g, 2);
  expect_valid_partition(g, s, 2);
  EXPECT_DOUBLE_EQ(s.value, 0.0);
}

TEST(MinKCut, RangeErrors) {
  const Graph g = cycle_graph(4);
  const SteinerTree tree = gomory_hu_exact(g);
  EXPECT_THROW(min_k_cut(tree, g, 1), std::domain_error);
  EXPECT_THROW(min_k_cut(tree, g, 5), std::domain_error);
}
