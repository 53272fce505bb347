// Randomized separations derived from a feedback vertex set: balanced forest
// separators, two-way and three-way separations, and the tree decomposition
// they induce.
#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fvskit/graph.hpp"
#include "fvskit/random.hpp"

namespace fvs {

/// (A, B, S) partitions V with no edge between A and B.
struct Separation {
  VertexSet a;
  VertexSet b;
  VertexSet s;
  /// Forest separator part of s.
  VertexSet s_eps;
};

/// Classes S_I for nonempty I ⊆ {1,2,3}, indexed by the bitmask of I
/// (bit 0 = colour 1). Index 0 is unused. No edges run between S_I and S_J
/// when I ∩ J = ∅.
struct ThreeWaySeparation {
  std::array<VertexSet, 8> part;
  VertexSet s_eps;

  VertexSet& operator[](unsigned mask) { return part.at(mask); }
  const VertexSet& operator[](unsigned mask) const { return part.at(mask); }
};

/// The bipartite constraint graph between the FVS F and R = component
/// vertices (one per component of G - F - S_eps) plus subdivision vertices
/// (one per edge inside F).
struct ConstraintBipartite {
  VertexSet f;
  /// Component vertices come first, then subdivision vertices.
  std::vector<VertexSet> components;
  std::vector<std::pair<VertexId, VertexId>> subdivided_edges;
  /// r_neighbors[r] = F-neighbours of right vertex r.
  std::vector<std::vector<VertexId>> r_neighbors;
  /// f_neighbors[v] = right vertices adjacent to v ∈ F (indexed like f).
  std::vector<std::vector<std::size_t>> f_neighbors;

  std::size_t right_size() const { return r_neighbors.size(); }
  std::size_t component_count() const { return components.size(); }
};

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Largest bag size minus one (-1 for no bags).
  int width() const;
};

struct DecompositionCheck {
  bool valid = false;
  int width = -1;
  std::string violation;
};

struct SeparatorOptions {
  std::size_t attempts = 25;
  /// Try forest separators with beta in {1, 2, 4, ...} below the default
  /// beta = ceil(k^0.99) as well, keeping the cheapest separation.
  bool scan_beta = true;
};

/// Separation quality, used to rank attempts.
struct SeparationStats {
  std::size_t a_f = 0;
  std::size_t b_f = 0;
  std::size_t s = 0;
  std::size_t s_eps = 0;
};

/// Deletes at most beta - 1 vertices (beta when all weights are zero is
/// never needed) so that every remaining component weighs at most
/// w(V)/beta. Trees are rooted at their minimum id; the deepest vertex whose
/// remaining subtree is too heavy is cut first.
VertexSet forest_balanced_separator(const MultiGraph& forest, const std::vector<std::int64_t>& weight,
                                    std::size_t beta);

/// Default forest-separator size for an FVS of size k: max(1, ceil(k^0.99)).
std::size_t default_beta(std::size_t k);

ConstraintBipartite build_constraint_bipartite(const MultiGraph& g, const VertexSet& f,
                                               const VertexSet& s_eps);

Separation two_way_separation(const MultiGraph& g, const VertexSet& f, Rng& rng,
                              const SeparatorOptions& options = {});
ThreeWaySeparation three_way_separation(const MultiGraph& g, const VertexSet& f, Rng& rng,
                                        const SeparatorOptions& options = {});

SeparationStats separation_stats(const Separation& sep, const VertexSet& f);

/// Empty string when valid, otherwise a description of the first violation.
std::string check_separation(const MultiGraph& g, const Separation& sep);
std::string check_separation(const MultiGraph& g, const ThreeWaySeparation& sep);

TreeDecomposition tree_decomposition_from_fvs(const MultiGraph& g, const VertexSet& f, Rng& rng,
                                              const SeparatorOptions& options = {},
                                              Separation* used = nullptr);

DecompositionCheck validate_decomposition(const MultiGraph& g, const TreeDecomposition& td);

/// PACE .td format: "s td <bags> <width+1> <n>", "b <i> <v...>", "<i> <j>".
/// Vertices and bags are 1-indexed; n is the id bound of g.
void write_pace_td(std::ostream& os, const MultiGraph& g, const TreeDecomposition& td);

}  // namespace fvs
