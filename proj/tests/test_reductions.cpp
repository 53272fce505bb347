#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "fvskit/error.hpp"
#include "fvskit/instance_io.hpp"
#include "fvskit/oracle.hpp"
#include "fvskit/reductions.hpp"
#include "test_support.hpp"

namespace fvs {
namespace {

TEST(Reductions, LoopVertexIsForced) {
  MultiGraph g = testing::complete_graph(4);
  g.add_edge(1, 1);
  ReductionOutcome out = reduce_exhaustive(g, 2);
  EXPECT_TRUE(out.forced.contains(1));
  EXPECT_FALSE(out.infeasible);
  EXPECT_GE(out.fired.loops_deleted, 1u);
}

TEST(Reductions, SingleLoopVertex) {
  MultiGraph g(1);
  g.add_edge(0, 0);
  ReductionOutcome out = reduce_exhaustive(g, 1);
  EXPECT_TRUE(out.graph.empty());
  EXPECT_EQ(out.budget, 0);
  EXPECT_EQ(out.forced, VertexSet{0});
}

TEST(Reductions, PathDissolves) {
  ReductionOutcome out = reduce_exhaustive(testing::path_graph(5), 0);
  EXPECT_TRUE(out.graph.empty());
  EXPECT_EQ(out.budget, 0);
  EXPECT_TRUE(out.forced.empty());
  EXPECT_FALSE(out.infeasible);
}

TEST(Reductions, TriangleBecomesLoopThenForced) {
  ReductionOutcome out = reduce_exhaustive(testing::complete_graph(3), 1);
  EXPECT_TRUE(out.graph.empty());
  EXPECT_EQ(out.budget, 0);
  EXPECT_EQ(out.forced.size(), 1u);
  EXPECT_EQ(out.fired.degree_two_contracted, 2u);
  EXPECT_EQ(out.fired.loops_deleted, 1u);
  EXPECT_TRUE(reduce_exhaustive(testing::complete_graph(3), 0).infeasible);
}

TEST(Reductions, ForestSideDegreeObservation) {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    MultiGraph g = testing::random_multigraph(4 + rng() % 8, 0.35, 0.2, 0.0, rng);
    const VertexSet f = brute_min_fvs(g).witness;
    const VertexSet rest = g.vertex_set().minus(f);
    if (rest.empty()) continue;
    EXPECT_LE(degree_sum(g, rest), degree_sum(g, f) + 2 * (static_cast<int>(rest.size()) - 1));
  }
}

TEST(Reductions, TooManyLoopsIsInfeasible) {
  MultiGraph g(3);
  for (VertexId v = 0; v < 3; ++v) g.add_edge(v, v);
  ReductionOutcome out = reduce_exhaustive(g, 2);
  EXPECT_TRUE(out.infeasible);
  EXPECT_THROW(reduce_exhaustive(g, -1), Error);
}

TEST(Reductions, TreesDisappear) {
  Rng rng(1);
  MultiGraph tree = testing::random_connected(20, 0, false, rng);
  ReductionOutcome out = reduce_exhaustive(tree, 0);
  EXPECT_TRUE(out.graph.empty());
  EXPECT_TRUE(out.forced.empty());
  EXPECT_EQ(out.budget, 0);
}

TEST(Reductions, CycleCollapsesToOneForcedVertex) {
  ReductionOutcome out = reduce_exhaustive(cycle_graph(7), 1);
  EXPECT_TRUE(out.graph.empty());
  EXPECT_EQ(out.forced.size(), 1u);
  EXPECT_EQ(out.budget, 0);
  EXPECT_GT(out.fired.degree_two_contracted, 0u);
}

TEST(Reductions, MultiplicityIsTrimmedToTwo) {
  MultiGraph g = testing::complete_graph(4);
  g.add_edge(0, 1, 3);
  ReductionOutcome out = reduce_exhaustive(g, 3);
  EXPECT_EQ(out.graph.multiplicity(0, 1), 2);
  EXPECT_EQ(out.fired.multiplicities_trimmed, 1u);
}

TEST(Reductions, ReducedGraphsAreReducedAndEquivalent) {
  Rng rng(17);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(i) % 11;
    MultiGraph g = testing::random_multigraph(n, 0.15 + 0.1 * (i % 5), 0.25, 0.05, rng);
    if (i % 7 == 0) g.add_edge(0, 1, 4);
    ReductionOutcome out = reduce_exhaustive(g, static_cast<int>(n));
    ASSERT_FALSE(out.infeasible);
    for (VertexId v : out.graph.vertices()) {
      EXPECT_GE(out.graph.degree(v), 3);
      EXPECT_EQ(out.graph.loops(v), 0);
      for (const Neighbor& nb : out.graph.neighbors(v)) EXPECT_LE(nb.multiplicity, 2);
    }
    const std::size_t before = brute_min_fvs(g).size;
    const std::size_t after = brute_min_fvs(out.graph).size;
    EXPECT_EQ(before, after + out.forced.size()) << i;
    EXPECT_EQ(out.budget, static_cast<int>(n - out.forced.size()));
  }
}

TEST(Sampling, WeightsAreDegreeMinusThree) {
  MultiGraph g = testing::complete_graph(5);
  g.add_edge(0, 1);
  SampleWeights w = sample_weights(g);
  EXPECT_EQ(w.weight[0], 2);
  EXPECT_EQ(w.weight[4], 1);
  EXPECT_EQ(w.total, 2 + 2 + 1 + 1 + 1);
  EXPECT_THROW(sample_weights(cycle_graph(4)), Error);
}

TEST(Sampling, CompleteGraphIsUniform) {
  MultiGraph k5 = testing::complete_graph(5);
  Rng rng(6);
  std::map<VertexId, double> hits;
  const int rounds = 100000;
  for (int r = 0; r < rounds; ++r) ++hits[*sample_degree_weighted(k5, rng)];
  double chi2 = 0;
  for (auto [v, h] : hits) chi2 += std::pow(h - rounds / 5.0, 2) / (rounds / 5.0);
  EXPECT_EQ(hits.size(), 5u);
  EXPECT_LT(chi2, 18.47);  // 4 degrees of freedom, p = 0.001
}

TEST(Sampling, ThreeRegularGraphSignalsCompression) {
  Rng rng(2);
  EXPECT_FALSE(sample_degree_weighted(testing::petersen(), rng).has_value());
}

TEST(Sampling, DegreeWeightedFrequenciesMatch) {
  MultiGraph g = testing::complete_graph(6);
  g.add_edge(0, 1, 2);
  g.add_edge(2, 3);
  SampleWeights w = sample_weights(g);
  Rng rng(3);
  std::map<VertexId, double> hits;
  const int rounds = 60000;
  for (int r = 0; r < rounds; ++r) ++hits[*sample_degree_weighted(g, rng)];
  double chi2 = 0;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    const double expected = rounds * static_cast<double>(w.weight[i]) / static_cast<double>(w.total);
    if (expected == 0) {
      EXPECT_EQ(hits[w.vertices[i]], 0);
      continue;
    }
    chi2 += std::pow(hits[w.vertices[i]] - expected, 2) / expected;
    ++cells;
  }
  EXPECT_EQ(cells, 6u);
  EXPECT_LT(chi2, 20.52);  // 5 degrees of freedom, p = 0.001
}

TEST(Sampling, UniformFrequenciesMatch) {
  MultiGraph g(8);
  g.remove_vertex(3);
  Rng rng(4);
  std::map<VertexId, double> hits;
  const int rounds = 35000;
  for (int r = 0; r < rounds; ++r) ++hits[sample_uniform(g, rng)];
  EXPECT_EQ(hits.count(3), 0u);
  double chi2 = 0;
  for (auto [v, h] : hits) chi2 += std::pow(h - rounds / 7.0, 2) / (rounds / 7.0);
  EXPECT_LT(chi2, 22.46);  // 6 degrees of freedom, p = 0.001
  EXPECT_THROW(sample_uniform(MultiGraph(0), rng), Error);
}

}  // namespace
}  // namespace fvs
