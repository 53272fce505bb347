#include <gtest/gtest.h>

#include <sstream>

#include "fvskit/error.hpp"
#include "fvskit/instance_io.hpp"
#include "fvskit/oracle.hpp"
#include "fvskit/separators.hpp"
#include "test_support.hpp"

namespace fvs {
namespace {

std::int64_t weight_of(const VertexSet& s, const std::vector<std::int64_t>& w) {
  std::int64_t total = 0;
  for (VertexId v : s) total += w[v];
  return total;
}

void expect_balanced(const MultiGraph& forest, const std::vector<std::int64_t>& w, std::size_t beta) {
  VertexSet cut = forest_balanced_separator(forest, w, beta);
  EXPECT_LE(cut.size(), beta);
  const std::int64_t total = weight_of(forest.vertex_set(), w);
  for (const VertexSet& comp : connected_components(without(forest, cut))) {
    EXPECT_LE(weight_of(comp, w) * static_cast<std::int64_t>(beta), total);
  }
}

TEST(ForestSeparator, PathOfNine) {
  MultiGraph p = testing::path_graph(9);
  expect_balanced(p, std::vector<std::int64_t>(9, 1), 3);
}

TEST(ForestSeparator, StarCenter) {
  MultiGraph star(9);
  for (VertexId v = 1; v < 9; ++v) star.add_edge(0, v);
  expect_balanced(star, std::vector<std::int64_t>(9, 1), 2);
  EXPECT_EQ(forest_balanced_separator(star, std::vector<std::int64_t>(9, 1), 2), VertexSet{0});
}

TEST(ForestSeparator, SingleVertex) {
  MultiGraph one(1);
  VertexSet cut = forest_balanced_separator(one, {4}, 1);
  EXPECT_LE(cut.size(), 1u);
}

TEST(ForestSeparator, RandomForests) {
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 200;
    MultiGraph forest(n);
    for (VertexId v = 1; v < n; ++v) {
      if (rng() % 5 != 0) forest.add_edge(static_cast<VertexId>(rng() % v), v);
    }
    std::vector<std::int64_t> w(n);
    for (auto& x : w) x = static_cast<std::int64_t>(rng() % 7);
    expect_balanced(forest, w, 1 + rng() % 20);
  }
}

TEST(ForestSeparator, RejectsBadInput) {
  EXPECT_THROW(forest_balanced_separator(cycle_graph(3), {1, 1, 1}, 2), Error);
  EXPECT_THROW(forest_balanced_separator(testing::path_graph(3), {1, 1, 1}, 0), Error);
  EXPECT_THROW(forest_balanced_separator(testing::path_graph(3), {1, 1}, 1), Error);
}

TEST(ConstraintBipartite, Triangle) {
  MultiGraph g = testing::complete_graph(3);
  ConstraintBipartite h = build_constraint_bipartite(g, {0}, {});
  EXPECT_EQ(h.component_count(), 1u);
  EXPECT_EQ(h.right_size(), 1u);
  EXPECT_EQ(h.r_neighbors[0], std::vector<VertexId>{0});
  EXPECT_THROW(build_constraint_bipartite(g, {}, {}), Error);
}

TEST(ConstraintBipartite, EdgeInsideFIsSubdivided) {
  MultiGraph g = testing::complete_graph(4);
  ConstraintBipartite h = build_constraint_bipartite(g, {0, 1, 2}, {});
  EXPECT_EQ(h.subdivided_edges.size(), 3u);
  for (std::size_t r = h.component_count(); r < h.right_size(); ++r) EXPECT_EQ(h.r_neighbors[r].size(), 2u);
}

TEST(ConstraintBipartite, RightSideIsBoundedByFDegree) {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    MultiGraph g = testing::random_multigraph(4 + rng() % 9, 0.3, 0.1, 0.0, rng);
    VertexSet f = brute_min_fvs(g).witness;
    ConstraintBipartite h = build_constraint_bipartite(g, f, {});
    std::size_t isolated = 0;
    for (std::size_t r = 0; r < h.component_count(); ++r) isolated += h.r_neighbors[r].empty();
    // Components with no edge to F have no F-degree to charge against.
    EXPECT_LE(h.right_size() - isolated, static_cast<std::size_t>(degree_sum(g, f)));
    std::size_t incidences = 0;
    for (const auto& nbs : h.f_neighbors) incidences += nbs.size();
    std::size_t from_right = 0;
    for (const auto& nbs : h.r_neighbors) from_right += nbs.size();
    EXPECT_EQ(incidences, from_right);
  }
}

TEST(TwoWay, ForestNeedsNoFvs) {
  Rng rng(1);
  MultiGraph g = testing::random_connected(12, 0, false, rng);
  Separation sep = two_way_separation(g, {}, rng);
  EXPECT_EQ(check_separation(g, sep), "");
  EXPECT_EQ(sep.s, sep.s_eps);
}

TEST(TwoWay, ValidOnK4AndRandomGraphs) {
  Rng rng(2);
  MultiGraph k4 = testing::complete_graph(4);
  EXPECT_EQ(check_separation(k4, two_way_separation(k4, {0, 1}, rng)), "");
  for (int i = 0; i < 300; ++i) {
    MultiGraph g = testing::random_multigraph(3 + rng() % 12, 0.3, 0.2, 0.05, rng);
    VertexSet f = brute_min_fvs(g).witness;
    Separation sep = two_way_separation(g, f, rng, {static_cast<std::size_t>(1 + i % 5), i % 2 == 0});
    ASSERT_EQ(check_separation(g, sep), "") << i;
    EXPECT_TRUE(sep.s_eps.intersected(f).empty());
    EXPECT_EQ(sep.s.intersected(sep.s_eps), sep.s_eps);
  }
  EXPECT_THROW(two_way_separation(k4, {0}, rng), Error);
}

TEST(TwoWay, PlantedInstancesAreBalanced) {
  Rng rng(3);
  PlantedInstance p = planted_fvs(150, 20, 3.0, rng);
  Separation sep = two_way_separation(p.graph, p.planted, rng, {100, true});
  SeparationStats st = separation_stats(sep, p.planted);
  EXPECT_EQ(check_separation(p.graph, sep), "");
  EXPECT_GE(std::min(st.a_f, st.b_f), 1u);
}

TEST(TwoWay, CheckerReportsViolations) {
  MultiGraph g = testing::path_graph(3);
  EXPECT_EQ(check_separation(g, Separation{{0}, {1}, {2}, {}}), "edge {0,1} joins A and B");
  EXPECT_EQ(check_separation(g, Separation{{0}, {0}, {1, 2}, {}}), "classes overlap");
  EXPECT_EQ(check_separation(g, Separation{{0}, {}, {1}, {}}), "classes do not cover V");
}

TEST(ThreeWay, ValidOnRandomGraphs) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    MultiGraph g = testing::random_multigraph(4 + rng() % 27, 0.15, 0.2, 0.0, rng);
    VertexSet f;
    for (VertexId v : g.vertices()) {
      if (rng() % 3 == 0) f.insert(v);
    }
    while (!is_forest(without(g, f))) f.insert(static_cast<VertexId>(rng() % g.vertex_count()));
    ThreeWaySeparation sep = three_way_separation(g, f, rng);
    ASSERT_EQ(check_separation(g, sep), "") << i;
    EXPECT_TRUE(sep.s_eps.intersected(sep[7]) == sep.s_eps);
  }
}

TEST(ThreeWay, ForestUsesSingletonClasses) {
  Rng rng(5);
  MultiGraph g = testing::random_connected(15, 0, false, rng);
  ThreeWaySeparation sep = three_way_separation(g, {}, rng);
  EXPECT_EQ(check_separation(g, sep), "");
  for (unsigned m : {3u, 5u, 6u}) EXPECT_TRUE(sep[m].empty());
  EXPECT_EQ(sep[7], sep.s_eps);
}

TEST(ThreeWay, CheckerReportsCrossingEdge) {
  MultiGraph g = testing::path_graph(2);
  ThreeWaySeparation sep;
  sep[1] = {0};
  sep[6] = {1};
  EXPECT_EQ(check_separation(g, sep), "edge {0,1} joins S_1 and S_6");
  sep[6] = {};
  sep[3] = {1};
  EXPECT_EQ(check_separation(g, sep), "");
}

TEST(Decomposition, SingleBagIsValid) {
  MultiGraph g = testing::complete_graph(5);
  TreeDecomposition td{{g.vertex_set()}, {}};
  DecompositionCheck c = validate_decomposition(g, td);
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.width, 4);
}

TEST(Decomposition, MissingEdgeIsNamed) {
  MultiGraph g = testing::path_graph(3);
  TreeDecomposition td{{{0, 1}, {2}}, {{0, 1}}};
  DecompositionCheck c = validate_decomposition(g, td);
  EXPECT_FALSE(c.valid);
  EXPECT_NE(c.violation.find("{1,2}"), std::string::npos) << c.violation;
}

TEST(Decomposition, DisconnectedOccurrencesAreRejected) {
  MultiGraph g = testing::path_graph(3);
  TreeDecomposition td{{{0, 1}, {1, 2}, {0}}, {{0, 1}, {1, 2}}};
  EXPECT_FALSE(validate_decomposition(g, td).valid);
  TreeDecomposition cyclic{{{0, 1}, {1, 2}, {1}}, {{0, 1}, {1, 2}, {2, 0}}};
  EXPECT_FALSE(validate_decomposition(g, cyclic).valid);
}

TEST(Decomposition, FromFvsIsValidWithinWidthBound) {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    MultiGraph g = testing::random_multigraph(3 + rng() % 12, 0.25, 0.2, 0.05, rng);
    VertexSet f = brute_min_fvs(g).witness;
    Separation used;
    TreeDecomposition td = tree_decomposition_from_fvs(g, f, rng, {}, &used);
    DecompositionCheck c = validate_decomposition(g, td);
    ASSERT_TRUE(c.valid) << c.violation;
    EXPECT_LE(c.width, static_cast<int>(f.size() + used.s_eps.size() + 1));
  }
}

TEST(Decomposition, ForestAndCycle) {
  Rng rng(7);
  MultiGraph tree = testing::random_connected(10, 0, false, rng);
  Separation used;
  DecompositionCheck c = validate_decomposition(tree, tree_decomposition_from_fvs(tree, {}, rng, {}, &used));
  EXPECT_TRUE(c.valid);
  EXPECT_LE(c.width, static_cast<int>(1 + used.s_eps.size()));

  MultiGraph c6 = cycle_graph(6);
  DecompositionCheck d = validate_decomposition(c6, tree_decomposition_from_fvs(c6, {0}, rng, {}, &used));
  EXPECT_TRUE(d.valid);
  EXPECT_LE(d.width, static_cast<int>(2 + used.s.size()));
}

TEST(Decomposition, PaceOutput) {
  MultiGraph g = testing::path_graph(3);
  TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  std::ostringstream os;
  write_pace_td(os, g, td);
  EXPECT_EQ(os.str(), "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
}

TEST(Beta, DefaultFollowsPower) {
  EXPECT_EQ(default_beta(0), 1u);
  EXPECT_EQ(default_beta(1), 1u);
  EXPECT_EQ(default_beta(40), 39u);
  EXPECT_EQ(default_beta(100), 96u);
}

}  // namespace
}  // namespace fvs
