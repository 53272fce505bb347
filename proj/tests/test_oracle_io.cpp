#include <gtest/gtest.h>

#include "fvskit/cutcount.hpp"
#include "fvskit/error.hpp"
#include "fvskit/instance_io.hpp"
#include "fvskit/oracle.hpp"
#include "test_support.hpp"

namespace fvs {
namespace {

IsolationWeights unit_weights(const MultiGraph& g) {
  IsolationWeights w;
  w.n = g.vertex_count();
  w.omega.assign(g.id_bound(), 1);
  w.degree.assign(g.id_bound(), 0);
  for (VertexId v : g.vertices()) w.degree[v] = static_cast<std::uint32_t>(g.degree(v));
  return w;
}

TEST(Oracle, MinimumExamples) {
  EXPECT_EQ(brute_min_fvs(cycle_graph(6)).size, 1u);
  EXPECT_EQ(brute_min_fvs(testing::path_graph(6)).size, 0u);
  EXPECT_EQ(brute_min_fvs(testing::complete_graph(5)).size, 3u);
  EXPECT_EQ(brute_min_fvs(testing::petersen()).size, 3u);
  EXPECT_EQ(brute_min_fvs(disjoint_cycles(3, 3)).size, 3u);
  EXPECT_THROW(brute_min_fvs(MultiGraph(17)), Error);
}

TEST(Oracle, VerifyExamples) {
  MultiGraph c5 = cycle_graph(5);
  EXPECT_TRUE(verify_fvs(c5, {2}));
  EXPECT_FALSE(verify_fvs(c5, {}));
  EXPECT_FALSE(verify_fvs(c5, {7}));
  MultiGraph pair(2);
  pair.add_edge(0, 1, 2);
  EXPECT_TRUE(verify_fvs(pair, {1}));
}

TEST(Oracle, MinimumIsMonotoneUnderEdgeInsertion) {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    MultiGraph g = testing::random_multigraph(8, 0.25, 0.1, 0.0, rng);
    std::size_t before = brute_min_fvs(g).size;
    g.add_edge(static_cast<VertexId>(rng() % 8), static_cast<VertexId>(rng() % 8));
    EXPECT_GE(brute_min_fvs(g).size, before);
  }
}

TEST(Oracle, CutObjectExamples) {
  MultiGraph empty(0);
  IsolationWeights w0 = unit_weights(empty);
  EXPECT_EQ(brute_cut_objects(empty, w0, 0, 0, 0), 1u);

  MultiGraph one(1);
  IsolationWeights w1 = unit_weights(one);
  EXPECT_EQ(brute_cut_objects(one, w1, 1, 0, w1.omega_prime(0)), 1u);
  EXPECT_EQ(brute_cut_objects(one, w1, 0, 0, 0), 2u);

  // Triangle with unit ω: s = 1 leaves an edge whose ends share a side
  // (2 ways, m' = 1); s = 0 forces all three onto one side.
  MultiGraph tri = testing::complete_graph(3);
  IsolationWeights w = unit_weights(tri);
  const std::uint64_t one_vertex = w.omega_prime(0);
  EXPECT_EQ(brute_cut_objects(tri, w, 1, 1, one_vertex), 6u);
  EXPECT_EQ(brute_cut_objects(tri, w, 1, 0, one_vertex), 0u);
  EXPECT_EQ(brute_cut_objects(tri, w, 0, 3, 0), 2u);
  EXPECT_EQ(brute_cut_objects(tri, w, 2, 0, 2 * one_vertex), 6u);
  EXPECT_THROW(brute_cut_object_table(MultiGraph(11), unit_weights(MultiGraph(11))), Error);
}

TEST(Oracle, WeightMarginalsCountPartitions) {
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    MultiGraph g = testing::random_multigraph(6, 0.4, 0.2, 0.1, rng);
    IsolationWeights w = draw_weights(g, rng);
    CutObjectTable with_weights = brute_cut_object_table(g, w);
    CutObjectTable unit = brute_cut_object_table(g, unit_weights(g));
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> a, b;
    for (auto& [key, c] : with_weights) a[{std::get<0>(key), std::get<1>(key)}] += c;
    for (auto& [key, c] : unit) b[{std::get<0>(key), std::get<1>(key)}] += c;
    EXPECT_EQ(a, b);
  }
}

TEST(InstanceIo, ParsesCommentsLoopsAndMultiplicity) {
  Instance inst = parse_instance_string("# planted: 1 2\n3 4\n1 2\n1 2\n2 2\n\n# tail\n2 3\n");
  EXPECT_EQ(inst.graph.vertex_count(), 3u);
  EXPECT_EQ(inst.graph.edge_count(), 4u);
  EXPECT_EQ(inst.graph.multiplicity(0, 1), 2);
  EXPECT_EQ(inst.graph.loops(1), 1);
  EXPECT_EQ(inst.comments, (std::vector<std::string>{"planted: 1 2", "tail"}));
}

TEST(InstanceIo, RejectsMalformedInput) {
  for (const char* bad : {"", "3\n", "2 1\n1 3\n", "2 2\n1 2\n", "2 1\n1 2\n2 1\n", "2 1\n0 1\n", "2 1\n1 x\n",
                          "-1 0\n"}) {
    try {
      parse_instance_string(bad);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse);
    }
  }
  EXPECT_THROW(read_instance_file("/nonexistent/instance.txt"), Error);
}

TEST(InstanceIo, RoundTripPreservesGraph) {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    MultiGraph g = testing::random_multigraph(1 + rng() % 12, 0.3, 0.3, 0.2, rng);
    Instance back = parse_instance_string(instance_to_string(g, {"x"}));
    EXPECT_EQ(back.graph, g);
    EXPECT_EQ(back.comments, std::vector<std::string>{"x"});
  }
}

TEST(InstanceIo, RoundTripRenumbersDeletedIds) {
  MultiGraph g = testing::complete_graph(4);
  g.remove_vertex(1);
  Instance back = parse_instance_string(instance_to_string(g));
  EXPECT_EQ(back.graph, testing::complete_graph(3));
}

TEST(Generators, Families) {
  MultiGraph c7 = cycle_graph(7);
  EXPECT_EQ(c7.vertex_count(), 7u);
  EXPECT_EQ(c7.edge_count(), 7u);
  EXPECT_EQ(cycle_graph(1).loops(0), 1);
  EXPECT_EQ(cycle_graph(2).multiplicity(0, 1), 2);
  EXPECT_THROW(cycle_graph(0), Error);

  Rng rng(44);
  MultiGraph gnm = random_gnm(10, 20, rng);
  EXPECT_EQ(gnm.edge_count(), 20u);
  for (VertexId v : gnm.vertices()) {
    EXPECT_EQ(gnm.loops(v), 0);
    for (const Neighbor& nb : gnm.neighbors(v)) EXPECT_EQ(nb.multiplicity, 1);
  }
  EXPECT_THROW(random_gnm(4, 7, rng), Error);
}

TEST(Generators, PlantedSetIsAnFvs) {
  Rng rng(45);
  for (int i = 0; i < 50; ++i) {
    PlantedInstance p = planted_fvs(40, 5, 3.0, rng);
    EXPECT_EQ(p.graph.vertex_count(), 45u);
    EXPECT_TRUE(verify_fvs(p.graph, p.planted));
    for (VertexId v : p.planted) EXPECT_EQ(p.graph.degree(v), 3);
  }
  EXPECT_THROW(planted_fvs(0, 2, 3.0, rng), Error);
}

TEST(Generators, DeterministicForSeed) {
  Rng a(9), b(9);
  EXPECT_EQ(random_gnm(12, 30, a), random_gnm(12, 30, b));
  EXPECT_EQ(planted_fvs(30, 4, 2.0, a).graph, planted_fvs(30, 4, 2.0, b).graph);
}

}  // namespace
}  // namespace fvs
