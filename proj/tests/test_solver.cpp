#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fvskit/error.hpp"
#include "fvskit/instance_io.hpp"
#include "fvskit/oracle.hpp"
#include "fvskit/solver.hpp"
#include "test_support.hpp"

namespace fvs {
namespace {

SolverConfig simple_config(std::uint64_t seed = 0) {
  SolverConfig c = SolverConfig::for_variant(DeciderVariant::kSimple);
  c.seed = seed;
  return c;
}

TEST(Config, DerivedConstants) {
  SolverConfig s = SolverConfig::for_variant(DeciderVariant::kSimple);
  EXPECT_DOUBLE_EQ(s.epsilon, kSimpleEpsilon);
  EXPECT_NEAR(s.dbar(), (4 - 2 * kSimpleEpsilon) / (1 - kSimpleEpsilon), 1e-12);
  EXPECT_GE(s.dbar(), 4.0);
  EXPECT_NEAR(s.compression_exponent(), 1 - std::pow(2.0, -s.dbar()), 1e-12);
  EXPECT_LE(s.c_eps(), 2.8446 + 1e-4);
  EXPECT_GE(s.c_eps(), 3 - kSimpleEpsilon - 1e-12);

  SolverConfig t = SolverConfig::for_variant(DeciderVariant::kThreeWay);
  EXPECT_DOUBLE_EQ(t.epsilon, kThreeWayEpsilon);
  EXPECT_LT(t.compression_exponent(), 1.0);
  EXPECT_GT(t.compression_exponent(), 0.0);
}

TEST(Config, ValidationRejectsBadSettings) {
  SolverConfig c;
  c.epsilon = 1.0;
  EXPECT_THROW(c.validate(), Error);
  c = SolverConfig{};
  c.budget_constant = 0;
  EXPECT_THROW(c.validate(), Error);
  c = SolverConfig{};
  c.separator_attempts = 0;
  EXPECT_THROW(c.validate(), Error);
}

TEST(IterativeCompression, Examples) {
  Rng rng(1);
  const double dbar = 4.0;
  std::optional<VertexSet> forest = iterative_compression(testing::path_graph(8), 2, dbar, DeciderVariant::kSimple, rng);
  ASSERT_TRUE(forest);
  EXPECT_TRUE(forest->empty());

  for (DeciderVariant variant : {DeciderVariant::kSimple, DeciderVariant::kThreeWay}) {
    std::optional<VertexSet> c6 = iterative_compression(cycle_graph(6), 1, dbar, variant, rng);
    ASSERT_TRUE(c6);
    EXPECT_EQ(c6->size(), 1u);
    EXPECT_TRUE(verify_fvs(cycle_graph(6), *c6));
    EXPECT_FALSE(iterative_compression(disjoint_cycles(2, 3), 1, dbar, variant, rng));
  }
}

TEST(IterativeCompression, MatchesOracleWithBudgetSlack) {
  Rng rng(2);
  SolveStats stats;
  for (int i = 0; i < 80; ++i) {
    MultiGraph g = testing::random_multigraph(5 + rng() % 7, 0.35, 0.15, 0.05, rng);
    const std::size_t k = brute_min_fvs(g).size;
    // A degree budget of 2m admits every set, so only the size constraint bites.
    const double dbar = k == 0 ? 1.0 : 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(k);
    DeciderVariant variant = i % 2 ? DeciderVariant::kThreeWay : DeciderVariant::kSimple;
    std::optional<VertexSet> yes = iterative_compression(g, k, dbar, variant, rng, {}, &stats);
    ASSERT_TRUE(yes) << i;
    EXPECT_LE(yes->size(), k);
    EXPECT_TRUE(verify_fvs(g, *yes));
    if (k > 0) {
      EXPECT_FALSE(iterative_compression(g, k - 1, dbar, variant, rng));
    }
  }
  EXPECT_GT(stats.compressions, 0u);
}

TEST(Trial, AcyclicAndInfeasible) {
  Rng rng(3);
  SolverConfig c = simple_config();
  std::optional<VertexSet> none = fvs_trial(testing::path_graph(6), 0, c, rng);
  ASSERT_TRUE(none);
  EXPECT_TRUE(none->empty());
  for (int t = 0; t < 200; ++t) EXPECT_FALSE(fvs_trial(testing::complete_graph(5), 2, c, rng));
}

TEST(Trial, FaithfulRateOnCycle) {
  SolverConfig c = simple_config();
  c.faithful_coin = true;
  std::size_t success = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(77, static_cast<std::uint64_t>(t)));
    if (fvs_trial(cycle_graph(5), 1, c, rng)) ++success;
  }
  const double p0 = 1.0 / c.c_eps();
  EXPECT_GE(static_cast<double>(success) / trials, p0 - 3 * std::sqrt(p0 * (1 - p0) / trials));
}

TEST(Trial, ThreeRegularGraphsTakeCompression) {
  SolverConfig c = simple_config();
  c.ic_threshold = 0;
  SolveStats stats;
  Rng rng(4);
  std::optional<VertexSet> f = fvs_trial(testing::petersen(), 3, c, rng, &stats);
  ASSERT_TRUE(f);
  EXPECT_TRUE(verify_fvs(testing::petersen(), *f));
  EXPECT_GE(stats.forced_heads, 1u);
}

TEST(Solve, NamedGraphs) {
  SolverConfig c = simple_config(5);
  SolveResult p3 = solve(testing::petersen(), 3, c);
  ASSERT_TRUE(p3.fvs);
  EXPECT_EQ(p3.fvs->size(), 3u);
  EXPECT_FALSE(solve(testing::petersen(), 2, c).fvs);

  SolveResult k5 = solve(testing::complete_graph(5), 3, c);
  ASSERT_TRUE(k5.fvs);
  EXPECT_EQ(k5.fvs->size(), 3u);
  EXPECT_FALSE(solve(testing::complete_graph(5), 2, c).fvs);

  SolveResult c5 = solve(cycle_graph(5), 1, c);
  ASSERT_TRUE(c5.fvs);
  EXPECT_EQ(c5.fvs->size(), 1u);
  EXPECT_FALSE(solve(disjoint_cycles(2, 3), 1, c).fvs);
}

TEST(Solve, BudgetGuard) {
  SolverConfig c = simple_config();
  c.max_k = 4;
  try {
    solve(testing::complete_graph(8), 5, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(Solve, TrialBudgetFollowsFormula) {
  SolverConfig c = simple_config();
  c.cyclomatic_prune = false;
  c.budget_constant = 2.0;
  SolveResult r = solve(testing::complete_graph(6), 3, c);
  EXPECT_FALSE(r.fvs);
  EXPECT_EQ(r.stats.budget, static_cast<std::size_t>(std::ceil(2.0 * std::pow(c.c_eps(), 3) * 3)));
  EXPECT_EQ(r.stats.trials_used, r.stats.budget);
  c.trials = 7;
  EXPECT_EQ(solve(testing::complete_graph(6), 3, c).stats.trials_used, 7u);
}

TEST(Solve, AgreesWithOracleOnBothVariants) {
  Rng rng(6);
  for (int i = 0; i < 60; ++i) {
    MultiGraph g = testing::random_multigraph(4 + rng() % 11, 0.3, 0.2, 0.05, rng);
    const std::size_t k = brute_min_fvs(g).size;
    SolverConfig c = SolverConfig::for_variant(i % 2 ? DeciderVariant::kThreeWay : DeciderVariant::kSimple);
    c.seed = static_cast<std::uint64_t>(i);
    c.ic_threshold = i % 3 == 0 ? 0 : 8;
    SolveResult yes = solve(g, k, c);
    ASSERT_TRUE(yes.fvs) << i;
    EXPECT_TRUE(verify_fvs(g, *yes.fvs));
    EXPECT_LE(yes.fvs->size(), k);
    if (k > 0) {
      EXPECT_FALSE(solve(g, k - 1, c).fvs) << i;
    }
  }
}

TEST(Solve, VerdictsInvariantUnderRelabelling) {
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 5 + rng() % 9;
    MultiGraph g = testing::random_multigraph(n, 0.3, 0.2, 0.05, rng);
    std::vector<VertexId> perm(n);
    for (std::size_t v = 0; v < n; ++v) perm[v] = static_cast<VertexId>(v);
    std::shuffle(perm.begin(), perm.end(), rng);
    MultiGraph h = testing::relabel(g, perm);
    const std::size_t k = brute_min_fvs(g).size;
    for (std::size_t kk : {k, k > 0 ? k - 1 : k}) {
      SolverConfig c = simple_config(static_cast<std::uint64_t>(i));
      EXPECT_EQ(solve(g, kk, c).fvs.has_value(), solve(h, kk, c).fvs.has_value()) << i;
    }
  }
}

TEST(Solve, SeedDeterminesResult) {
  MultiGraph g = testing::petersen();
  g.add_edge(0, 7);
  SolverConfig c = simple_config(11);
  SolveResult a = solve(g, 4, c);
  SolveResult b = solve(g, 4, c);
  ASSERT_TRUE(a.fvs);
  EXPECT_EQ(*a.fvs, *b.fvs);
  EXPECT_EQ(a.stats.trials_used, b.stats.trials_used);
}

TEST(Solve, ParallelJobsGiveTheSameAnswer) {
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    MultiGraph g = testing::random_multigraph(12, 0.3, 0.1, 0.0, rng);
    const std::size_t k = brute_min_fvs(g).size;
    SolverConfig one = simple_config(static_cast<std::uint64_t>(i));
    one.ic_threshold = 0;
    SolverConfig many = one;
    many.jobs = 4;
    SolveResult a = solve(g, k, one);
    SolveResult b = solve(g, k, many);
    ASSERT_TRUE(a.fvs && b.fvs);
    EXPECT_EQ(*a.fvs, *b.fvs);
  }
}

TEST(Solve, LoopsAreForced) {
  MultiGraph g = cycle_graph(6);
  g.add_edge(3, 3);
  SolveResult r = solve(g, 1, simple_config());
  ASSERT_TRUE(r.fvs);
  EXPECT_EQ(*r.fvs, VertexSet{3});
  EXPECT_GE(r.stats.reductions.loops_deleted, 1u);
}

}  // namespace
}  // namespace fvs
