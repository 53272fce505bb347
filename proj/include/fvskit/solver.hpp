// Drivers: iterative compression over the counting deciders, the randomized
// branching trial and probability boosting.
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>

#include "fvskit/graph.hpp"
#include "fvskit/random.hpp"
#include "fvskit/reductions.hpp"

namespace fvs {

enum class DeciderVariant { kSimple, kThreeWay };

inline constexpr double kSimpleEpsilon = 0.155433;
inline constexpr double kThreeWayEpsilon = 0.3000237;
/// Matrix-multiplication exponent used for the three-way cost base.
inline constexpr double kMmExponent = 2.3728639;

struct SolverConfig {
  double epsilon = kSimpleEpsilon;
  DeciderVariant variant = DeciderVariant::kSimple;
  std::uint64_t seed = 0;
  /// Trial budget is max(1, ceil(budget_constant · c^k · k)) unless `trials`
  /// is nonzero.
  double budget_constant = 1.0;
  std::size_t trials = 0;
  std::size_t separator_attempts = 25;
  /// Flip the literal coin with heads probability 3^{-x·k'} instead of
  /// running compression whenever k' ≤ ic_threshold.
  bool faithful_coin = false;
  int ic_threshold = 8;
  int max_k = 24;
  unsigned jobs = 1;
  /// Reuse compression results for repeated (graph, k) subproblems of one solve.
  bool memoize = true;
  /// Reject when the cyclomatic number exceeds what k deletions can remove.
  bool cyclomatic_prune = true;

  static SolverConfig for_variant(DeciderVariant variant);

  /// d̄ = (4 − 2ε)/(1 − ε).
  double dbar() const;
  /// x with compression cost 3^{x·k}: 1 − 2^{−d̄} for the simple decider and
  /// 1 − ((3 − mm)(2/3)^{d̄} + (2mm − 3)3^{−d̄}) for the three-way decider.
  double compression_exponent() const;
  /// c_ε = max(3 − ε, 3^{compression_exponent}).
  double c_eps() const;
  /// Throws Error(kInvalidArgument) on out-of-range settings.
  void validate() const;
};

struct SolveStats {
  std::size_t budget = 0;
  std::size_t trials_used = 0;
  RuleCounts reductions;
  std::size_t coin_heads = 0;
  std::size_t forced_heads = 0;
  std::size_t branch_steps = 0;
  std::size_t ic_runs = 0;
  std::size_t ic_cache_hits = 0;
  std::size_t compressions = 0;
  std::size_t decider_draws = 0;
  std::size_t keys_scanned = 0;
  std::size_t pruned = 0;
  /// Best min(|A∩F|, |B∩F|) (two-way) or min_i |S_i∩F| (three-way) seen.
  std::size_t separator_balance = 0;
  std::size_t separator_max_s = 0;

  void merge(const SolveStats& other);
};

struct SolveResult {
  std::optional<VertexSet> fvs;
  SolveStats stats;
};

struct IcOptions {
  std::size_t separator_attempts = 25;
};

/// Adds vertices in id order while keeping an FVS F of the prefix graph with
/// |F| ≤ k and deg(F) ≤ dbar·k, compressing through the chosen decider when
/// the cheap updates fail.
std::optional<VertexSet> iterative_compression(const MultiGraph& g, std::size_t k, double dbar,
                                               DeciderVariant variant, Rng& rng, const IcOptions& options = {},
                                               SolveStats* stats = nullptr);

class SolveContext;

/// One randomized run of the branching algorithm. Never returns a set that
/// is not a verified FVS of size ≤ k.
std::optional<VertexSet> fvs_trial(const MultiGraph& g, std::size_t k, const SolverConfig& config, Rng& rng,
                                   SolveStats* stats = nullptr);

/// Boosted solver: independent trials until one succeeds or the budget runs
/// out. Throws Error(kBudgetExceeded) when k > config.max_k.
SolveResult solve(const MultiGraph& g, std::size_t k, const SolverConfig& config);

}  // namespace fvs
