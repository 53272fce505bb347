// Brute-force ground truth: minimum FVS by subset enumeration, FVS
// verification and direct enumeration of cut objects over all 3^n
// assignments.
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>

#include "fvskit/cutcount.hpp"
#include "fvskit/graph.hpp"

namespace fvs {

struct OracleLimit {
  std::size_t max_subset_n = 16;
  std::size_t max_cut_object_n = 10;
};

struct MinFvs {
  std::size_t size = 0;
  VertexSet witness;
};

/// Tries subsets by increasing size, each size in lexicographic order.
MinFvs brute_min_fvs(const MultiGraph& g, const OracleLimit& limit = {});

/// True iff s ⊆ V(g) and g - s is a forest.
bool verify_fvs(const MultiGraph& g, const VertexSet& s);

/// Exact counts keyed by (s, m', W) with W = Σ ω'(v) over F.
using CutObjectTable = std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, std::uint64_t>;

/// All assignments V → {F, L, R} with no L-R edge, tallied by key. Vertices
/// in `fixed_f`, `fixed_l` and `fixed_r` are pinned to that class.
CutObjectTable brute_cut_object_table(const MultiGraph& g, const IsolationWeights& weights,
                                      const VertexSet& fixed_f = {}, const VertexSet& fixed_l = {},
                                      const VertexSet& fixed_r = {}, const OracleLimit& limit = {});

/// Single-key count |C^{s,m'}_W|.
std::uint64_t brute_cut_objects(const MultiGraph& g, const IsolationWeights& weights, std::size_t s,
                                std::size_t m_prime, std::uint64_t big_w, const OracleLimit& limit = {});

}  // namespace fvs
