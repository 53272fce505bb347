// Undirected multigraph with loops, stable vertex ids and multiplicity-aware
// degrees. This is the substrate for every other module in fvskit.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace fvs {

using VertexId = std::uint32_t;

/// Sorted set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids);
  explicit VertexSet(std::vector<VertexId> ids);

  bool insert(VertexId v);
  bool erase(VertexId v);
  bool contains(VertexId v) const;

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<VertexId>& ids() const { return ids_; }

  VertexSet united(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> ids_;
};

struct Neighbor {
  VertexId id;
  int multiplicity;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Undirected multigraph. Vertex ids are dense at construction and stay
/// stable under deletion (deleted ids become tombstones). A loop adds one
/// edge and contributes 2 to the degree of its vertex.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t vertex_count);

  VertexId add_vertex();
  void add_edge(VertexId u, VertexId v, int multiplicity = 1);
  /// Sets the multiplicity of {u,v} (u == v sets the loop count).
  void set_multiplicity(VertexId u, VertexId v, int multiplicity);
  void remove_vertex(VertexId v);

  bool contains(VertexId v) const { return v < alive_.size() && alive_[v]; }
  /// Size of the id space, including tombstones.
  std::size_t id_bound() const { return alive_.size(); }
  std::size_t vertex_count() const { return n_; }
  /// Edge count with multiplicity; a loop counts as one edge.
  std::size_t edge_count() const { return m_; }
  bool empty() const { return n_ == 0; }

  int degree(VertexId v) const;
  int loops(VertexId v) const;
  int multiplicity(VertexId u, VertexId v) const;
  /// Non-loop neighbours sorted by id.
  std::span<const Neighbor> neighbors(VertexId v) const;

  /// Live vertices in increasing id order.
  std::vector<VertexId> vertices() const;
  VertexSet vertex_set() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  void check_vertex(VertexId v) const;
  int& link(VertexId u, VertexId v);

  std::vector<std::vector<Neighbor>> adj_;
  std::vector<int> loops_;
  std::vector<bool> alive_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
};

/// True iff g has no cycle. Loops and parallel edges are cycles.
bool is_forest(const MultiGraph& g);
std::vector<VertexSet> connected_components(const MultiGraph& g);
std::size_t component_count(const MultiGraph& g);

/// Subgraph on s, keeping ids, multiplicities and loops.
MultiGraph induced(const MultiGraph& g, const VertexSet& s);
MultiGraph without(const MultiGraph& g, const VertexSet& s);

int degree_sum(const MultiGraph& g, const VertexSet& s);
/// Number of edges (with multiplicity) with one endpoint in s and one in t;
/// for overlapping sets an edge inside the overlap is counted once.
std::size_t edges_between(const MultiGraph& g, const VertexSet& s, const VertexSet& t);

}  // namespace fvs
