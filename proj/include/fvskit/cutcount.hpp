// Cut&Count over a known feedback vertex set: isolation weights, the forest
// dynamic program, counting across two-way and three-way separations, the
// randomized decision procedure and witness reconstruction by self-reduction.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "fvskit/count_table.hpp"
#include "fvskit/graph.hpp"
#include "fvskit/random.hpp"
#include "fvskit/separators.hpp"

namespace fvs {

/// ω(v) ∈ {1..2n} and ω'(v) = n²·ω(v) + deg(v), with deg taken in the graph
/// the weights were drawn for.
struct IsolationWeights {
  std::size_t n = 0;
  std::vector<std::uint32_t> omega;
  std::vector<std::uint32_t> degree;

  std::uint64_t omega_prime(VertexId v) const { return std::uint64_t{omega[v]} * n * n + degree[v]; }
  /// Packed key contribution of v joining F'.
  std::uint64_t f_key(VertexId v) const { return packed::make(1, degree[v], omega[v], 0); }
};

IsolationWeights draw_weights(const MultiGraph& g, Rng& rng);

enum class Place : std::uint8_t { kF = 0, kL = 1, kR = 2 };

/// Per-vertex restriction threaded through the counting: a forced-in vertex
/// must lie in F', a forced-out vertex in L' ∪ R'.
class Forcing {
 public:
  Forcing() = default;
  explicit Forcing(std::size_t id_bound) : state_(id_bound, 0) {}

  void force_in(VertexId v) { grow(v), state_[v] = 1; }
  void force_out(VertexId v) { grow(v), state_[v] = -1; }
  void release(VertexId v) { grow(v), state_[v] = 0; }
  bool allows(VertexId v, Place p) const {
    int st = v < state_.size() ? state_[v] : 0;
    return st == 0 || (st == 1) == (p == Place::kF);
  }

 private:
  void grow(VertexId v) {
    if (v >= state_.size()) state_.resize(v + 1, 0);
  }
  std::vector<std::int8_t> state_;
};

/// Counts extensions of a trace assignment over a graph h whose non-trace
/// part is a forest. Tables are cached per tree and per assignment of the
/// tree's trace neighbours, so one instance serves one (weights, forcing,
/// limits) combination.
class ForestCounter {
 public:
  ForestCounter(const MultiGraph& h, std::vector<VertexId> trace, const IsolationWeights& weights,
                const Forcing& forcing, const KeyLimits& limits);

  const std::vector<VertexId>& trace() const { return trace_; }

  /// Counts over the forest part only: F'-vertex keys plus edges from forest
  /// vertices to same-side trace vertices and forest-internal same-side edges.
  CountTable extension(std::span<const Place> assignment);
  /// Trace contribution (F-vertex keys and same-side trace-internal edges),
  /// or nullopt when the assignment puts an edge between L and R.
  std::optional<std::uint64_t> trace_key(std::span<const Place> assignment) const;
  /// trace_key ⊛ extension, restricted to the limits.
  CountTable full(std::span<const Place> assignment);
  /// Sum of full() over every assignment agreeing with `prefix` on the first
  /// prefix.size() trace vertices and allowed by the forcing elsewhere.
  CountTable sum_extending(std::span<const Place> prefix);

  std::size_t tree_count() const { return trees_.size(); }
  std::size_t cache_hits() const { return cache_hits_; }

 private:
  struct TraceLink {
    std::uint32_t trace_index;
    std::uint32_t multiplicity;
  };
  struct Node {
    VertexId id;
    std::int32_t parent;  // local index, -1 for the root
    std::vector<TraceLink> links;
  };
  struct Tree {
    std::vector<Node> nodes;  // preorder
    std::vector<std::uint32_t> trace_neighbours;
    std::unordered_map<std::uint64_t, CountTable> cache;
  };

  CountTable tree_table(Tree& tree, std::span<const Place> assignment);
  /// Key added by placing trace position j, given positions before j.
  std::optional<std::uint64_t> placement_delta(std::span<const Place> assignment, std::size_t j) const;
  std::optional<std::uint64_t> trace_key_prefix(std::span<const Place> assignment, std::size_t length) const;
  void enumerate(std::vector<Place>& assignment, std::size_t pos, std::uint64_t key, CountTable& out);

  const MultiGraph* h_;
  std::vector<VertexId> trace_;
  std::vector<std::int64_t> trace_pos_;
  const IsolationWeights* weights_;
  Forcing forcing_;
  KeyLimits limits_;
  std::vector<Tree> trees_;
  CountTable free_part_;
  std::size_t cache_hits_ = 0;
};

/// Number (mod 2^64) of extensions (F',L',R') of (F,L,R) to all of g with
/// ω'(F') = big_w, |F'| = s, no L'-R' edge and |E[L' ∪ R']| = m_prime.
/// F ∪ L ∪ R must be a feedback vertex set of g.
std::uint64_t forest_dp(const MultiGraph& g, const IsolationWeights& weights, const VertexSet& f,
                        const VertexSet& l, const VertexSet& r, std::size_t s, std::size_t m_prime,
                        std::uint64_t big_w);

/// Full extension table of a trace assignment (F,L,R) over g.
CountTable forest_dp_table(const MultiGraph& g, const IsolationWeights& weights, const VertexSet& f,
                           const VertexSet& l, const VertexSet& r, const Forcing& forcing = {},
                           const KeyLimits& limits = KeyLimits::unbounded());

/// One way of placing a list of vertices, with the key it contributes.
struct Placement {
  std::vector<Place> places;
  std::uint64_t key = 0;
};

/// All placements of `vertices` allowed by the forcing and free of L-R edges,
/// both among themselves and towards an already placed `context`. The key
/// counts F'-vertices of the list, same-side edges inside the list and
/// same-side edges between the list and the context.
std::vector<Placement> enumerate_placements(const MultiGraph& g, const std::vector<VertexId>& vertices,
                                            const IsolationWeights& weights, const Forcing& forcing,
                                            const std::vector<VertexId>& context = {},
                                            std::span<const Place> context_places = {});

/// A Cut&Count instance over a fixed graph and a fixed known FVS structure.
class CountingProblem {
 public:
  virtual ~CountingProblem() = default;
  virtual const MultiGraph& graph() const = 0;
  /// Table of cut-object counts of the whole graph restricted to `limits`.
  virtual CountTable count(const IsolationWeights& weights, const Forcing& forcing, const KeyLimits& limits) = 0;
};

/// Counting across a separation (A,B,S) of g derived from the FVS f.
class SimpleSeparationCounter final : public CountingProblem {
 public:
  SimpleSeparationCounter(MultiGraph g, VertexSet f, Separation sep);
  const MultiGraph& graph() const override { return g_; }
  CountTable count(const IsolationWeights& weights, const Forcing& forcing, const KeyLimits& limits) override;

 private:
  MultiGraph g_;
  VertexSet f_;
  Separation sep_;
  MultiGraph side_a_;
  MultiGraph side_b_;
};

/// Counting across a three-way separation of g derived from the FVS f,
/// combining the three sides with a weighted triangle sum.
class ThreeWayCounter final : public CountingProblem {
 public:
  ThreeWayCounter(MultiGraph g, VertexSet f, ThreeWaySeparation sep);
  const MultiGraph& graph() const override { return g_; }
  CountTable count(const IsolationWeights& weights, const Forcing& forcing, const KeyLimits& limits) override;

 private:
  MultiGraph g_;
  VertexSet f_;
  ThreeWaySeparation sep_;
  std::array<MultiGraph, 3> sides_;
};

/// Reference counter: brute enumeration of placements of the FVS f and the
/// forest DP for everything else, with no separation.
class DirectCounter final : public CountingProblem {
 public:
  DirectCounter(MultiGraph g, VertexSet f);
  const MultiGraph& graph() const override { return g_; }
  CountTable count(const IsolationWeights& weights, const Forcing& forcing, const KeyLimits& limits) override;

 private:
  MultiGraph g_;
  VertexSet f_;
};

/// True when the count at `key` certifies an odd number of forest solutions
/// on an n-vertex graph: count ≢ 0 (mod 2^{n-s-m+1}).
bool key_accepts(std::uint64_t count, const CutCountKey& key, std::size_t n);

struct DecideOptions {
  std::size_t k = 0;
  double dbar = 4.0;
  /// Independent weight draws before rejecting; 0 means 2n.
  std::size_t draws = 0;
};

struct Decision {
  bool accepted = false;
  CutCountKey key;
  IsolationWeights weights;
  std::size_t draws_used = 0;
  std::size_t keys_scanned = 0;
};

/// Largest admissible degree sum floor(dbar·k) (with a small tolerance for
/// floating-point noise).
std::uint64_t degree_budget(std::size_t k, double dbar);

/// First accepting key of a table (in key order) with s ≤ k and d ≤ dbar·k.
std::optional<CutCountKey> first_accepting_key(const CountTable& table, std::size_t n, std::size_t k, double dbar,
                                               std::size_t* scanned = nullptr);

/// Runs up to options.draws independent weight draws; accepts on the first
/// draw whose table has an accepting key.
Decision decide(CountingProblem& problem, const DecideOptions& options, Rng& rng);

/// Self-reduction under the accepting draw: vertices are forced in (kept when
/// the accepting key still accepts) or otherwise forced out, in id order.
/// Returns a verified FVS with |F| ≤ k and deg(F) ≤ dbar·k.
std::optional<VertexSet> reconstruct_witness(CountingProblem& problem, const Decision& decision,
                                             const DecideOptions& options);

/// decide + reconstruct_witness over a two-way separation of g built from f.
std::optional<VertexSet> count_simple_separation(const MultiGraph& g, const VertexSet& f, std::size_t k,
                                                 double dbar, const Separation& sep, Rng& rng,
                                                 Decision* decision = nullptr);
/// decide + reconstruct_witness over a three-way separation of g built from f.
std::optional<VertexSet> count_three_way(const MultiGraph& g, const VertexSet& f, std::size_t k, double dbar,
                                         const ThreeWaySeparation& sep, Rng& rng, Decision* decision = nullptr);

/// Per-(s, m', W) totals of a table, W = i·n² + d.
std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, std::uint64_t> aggregate_by_combined_weight(
    const CountTable& table, std::size_t n);

}  // namespace fvs
