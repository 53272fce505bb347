// Deterministic kernelization (loops, multiplicity trimming, low-degree
// removal) and the two randomized vertex-selection rules used by the solver.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fvskit/graph.hpp"
#include "fvskit/random.hpp"

namespace fvs {

struct RuleCounts {
  std::size_t loops_deleted = 0;
  std::size_t multiplicities_trimmed = 0;
  std::size_t low_degree_deleted = 0;
  std::size_t degree_two_contracted = 0;
};

struct ReductionOutcome {
  MultiGraph graph;
  int budget = 0;
  /// Vertices carrying loops; they belong to every feedback vertex set.
  VertexSet forced;
  bool infeasible = false;
  RuleCounts fired;
};

/// Applies the four kernel rules to fixpoint. Rule priority is loops, then
/// multiplicity > 2, then degree <= 1, then degree 2; every change restarts
/// the scan at the first rule. Infeasibility (more loop vertices than the
/// budget) is reported in the outcome, not thrown.
ReductionOutcome reduce_exhaustive(const MultiGraph& g, int budget);

/// w(v) = deg(v) - 3 over the live vertices of a reduced graph.
struct SampleWeights {
  std::vector<VertexId> vertices;
  std::vector<std::int64_t> weight;
  std::int64_t total = 0;
};

SampleWeights sample_weights(const MultiGraph& g);

/// Draws v with probability w(v)/w(V). Returns nullopt when w(V) = 0 (the
/// graph is 3-regular), which the solver treats as a signal to compress.
std::optional<VertexId> sample_degree_weighted(const MultiGraph& g, Rng& rng);

/// Uniform live vertex; throws on an empty graph.
VertexId sample_uniform(const MultiGraph& g, Rng& rng);

}  // namespace fvs
