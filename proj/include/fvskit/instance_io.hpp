// Text instance format and instance generators.
//
// Format: lines starting with '#' are comments; the first data line is
// "n m"; then m lines "u v" with 1-indexed endpoints. u == v is a loop and
// repeated lines add multiplicity.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "fvskit/graph.hpp"
#include "fvskit/random.hpp"

namespace fvs {

struct Instance {
  MultiGraph graph;
  std::vector<std::string> comments;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance read_instance_file(const std::string& path);

/// Live vertices are renumbered 1..n in id order.
void write_instance(std::ostream& out, const MultiGraph& g, const std::vector<std::string>& comments = {});
std::string instance_to_string(const MultiGraph& g, const std::vector<std::string>& comments = {});

MultiGraph cycle_graph(std::size_t n);
MultiGraph disjoint_cycles(std::size_t count, std::size_t length);
/// Uniform simple graph with n vertices and m distinct edges.
MultiGraph random_gnm(std::size_t n, std::size_t m, Rng& rng);

struct PlantedInstance {
  MultiGraph graph;
  VertexSet planted;
};

/// A random forest on `forest_size` vertices plus k extra vertices, each
/// joined to round(dbar) distinct forest vertices. The extra vertices form an
/// FVS of the result.
PlantedInstance planted_fvs(std::size_t forest_size, std::size_t k, double dbar, Rng& rng);

}  // namespace fvs
