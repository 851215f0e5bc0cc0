#include <gtest/gtest.h>

#include <stdexcept>

#include "dpgh/dp_mech.hpp"
#include "dpgh/graph.hpp"
#include "oracles.hpp"

using namespace dpgh;

namespace {

constexpr VertexId a = 0, b = 1, c = 2;

Graph triangle() { return Graph({a, b, c}, {{a, b, 1}, {b, c, 2}, {c, a, 3}}); }

VertexSet random_subset(const Graph& g, Rng& rng) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (rng.bernoulli(0.5)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

}  // namespace

TEST(Graph, MergesParallelEdgesAndDropsZeros) {
  const Graph g({0, 1, 2}, {{0, 1, 2.0}, {1, 0, 2.0}, {1, 2, 0.0}});
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_DOUBLE_EQ(g.weight(0, 1), 4.0);
  EXPECT_DOUBLE_EQ(g.weight(1, 0), 4.0);
  EXPECT_DOUBLE_EQ(g.weight(1, 2), 0.0);
}

TEST(Graph, RejectsInvalidConstruction) {
  EXPECT_THROW(Graph({0, 1}, {{0, 0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(Graph({0, 1}, {{0, 5, 1.0}}), std::invalid_argument);
  EXPECT_THROW(Graph({0, 1}, {{0, 1, -1.0}}), std::invalid_argument);
  EXPECT_THROW(Graph({0, 0}, {}), std::invalid_argument);
}

TEST(Graph, FreshLabelExceedsEveryVertex) {
  EXPECT_EQ(Graph({3, 9, 4}, {}).fresh_label(), 10);
  EXPECT_EQ(Graph().fresh_label(), 0);
}

TEST(CutWeight, TriangleExamples) {
  const Graph g = triangle();
  EXPECT_DOUBLE_EQ(cut_weight(g, {a}), 4.0);
  EXPECT_DOUBLE_EQ(cut_weight(g, {a, b}), 5.0);
  EXPECT_DOUBLE_EQ(cut_weight(g, {}), 0.0);
  EXPECT_DOUBLE_EQ(cut_weight(g, {a, b, c}), 0.0);
}

TEST(CutWeight, UnknownVertexIsDomainError) {
  EXPECT_THROW(cut_weight(triangle(), {7}), std::domain_error);
}

TEST(CutSide, RequiresProperNonemptySide) {
  EXPECT_THROW(make_cut_side(triangle(), {}), std::domain_error);
  EXPECT_THROW(make_cut_side(triangle(), {a, b, c}), std::domain_error);
  EXPECT_DOUBLE_EQ(make_cut_side(triangle(), {b}).value, 3.0);
}

TEST(Contract, PathPair) {
  const Graph path({a, b, c}, {{a, b, 3}, {b, c, 1}});
  const Contraction result = contract(path, {a, b}, 10);
  EXPECT_EQ(result.graph.vertices(), (VertexSet{c, 10}));
  EXPECT_DOUBLE_EQ(result.graph.weight(10, c), 1.0);
  EXPECT_EQ(result.graph.num_edges(), 1u);
  EXPECT_EQ(result.map(a), 10);
  EXPECT_EQ(result.map(c), c);
  EXPECT_EQ(result.map.preimage(10), (VertexSet{a, b}));
}

TEST(Contract, TriangleSumsWeights) {
  const Contraction result = contract(triangle(), {a, b}, 10);
  EXPECT_DOUBLE_EQ(result.graph.weight(10, c), 5.0);
}

TEST(Contract, SingletonIsRelabel) {
  const Contraction result = contract(triangle(), {a}, 10);
  EXPECT_EQ(result.graph, Graph({10, b, c}, {{10, b, 1}, {b, c, 2}, {c, 10, 3}}));
}

TEST(Contract, LabelMayReuseMember) {
  const Contraction result = contract(triangle(), {a, b}, b);
  EXPECT_DOUBLE_EQ(result.graph.weight(b, c), 5.0);
  EXPECT_THROW(contract(triangle(), {a}, c), std::domain_error);
}

TEST(Contract, ManyDisjointSets) {
  const Graph g = oracle::random_graph(8, 0.6, 5, 3);
  const Contraction result = contract_sets(g, {{{0, 1, 2}, 100}, {{5, 6}, 101}});
  for (const auto& [set, label] : result.map.groups()) {
    for (VertexId v : set) EXPECT_EQ(result.map(v), label);
  }
  EXPECT_DOUBLE_EQ(cut_weight(result.graph, {100}), cut_weight(g, {0, 1, 2}));
  EXPECT_DOUBLE_EQ(cut_weight(result.graph, {100, 101}), cut_weight(g, {0, 1, 2, 5, 6}));
  EXPECT_THROW(contract_sets(g, {{{0, 1}, 100}, {{1, 2}, 101}}), std::domain_error);
}

TEST(Neighboring, Examples) {
  const Graph g = triangle();
  EXPECT_TRUE(are_neighboring(g, g));
  const Graph plus_ab({a, b, c}, {{a, b, 2}, {b, c, 2}, {c, a, 3}});
  EXPECT_TRUE(are_neighboring(g, plus_ab));
  const Graph plus_two({a, b, c}, {{a, b, 2}, {b, c, 3}, {c, a, 3}});
  EXPECT_FALSE(are_neighboring(g, plus_two));
  const Graph plus_big({a, b, c}, {{a, b, 3}, {b, c, 2}, {c, a, 3}});
  EXPECT_FALSE(are_neighboring(g, plus_big));
  EXPECT_THROW(are_neighboring(g, Graph({a, b}, {})), std::domain_error);
}

TEST(CutProperties, SubmodularSymmetricAndContractionConsistent) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(9, 0.5, 7, 1000 + trial);
    const VertexSet s = random_subset(g, rng);
    const VertexSet t = random_subset(g, rng);
    EXPECT_GE(cut_weight(g, s) + cut_weight(g, t) + 1e-9,
              cut_weight(g, s.united(t)) + cut_weight(g, s.intersected(t)));
    EXPECT_NEAR(cut_weight(g, s), cut_weight(g, g.vertices().minus(s)), 1e-9);

    const oracle::CutTable table(g);
    EXPECT_NEAR(cut_weight(g, s), table.weight(s), 1e-9);

    const VertexSet x = random_subset(g, rng);
    if (x.empty()) continue;
    const VertexId label = g.fresh_label();
    const Contraction contracted = contract(g, x, label);
    const VertexSet rest = random_subset(contracted.graph, rng).minus({label});
    const VertexSet with_x = rest.united({label});
    EXPECT_NEAR(cut_weight(contracted.graph, with_x), cut_weight(g, rest.united(x)), 1e-9);
    EXPECT_EQ(contracted.map.expand(with_x), rest.united(x));
  }
}
