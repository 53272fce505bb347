#include "fvskit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fvskit/error.hpp"

namespace fvs {

VertexSet::VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::insert(VertexId v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) return false;
  ids_.insert(it, v);
  return true;
}

bool VertexSet::erase(VertexId v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return false;
  ids_.erase(it);
  return true;
}

bool VertexSet::contains(VertexId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

MultiGraph::MultiGraph(std::size_t vertex_count)
    : adj_(vertex_count), loops_(vertex_count, 0), alive_(vertex_count, true), n_(vertex_count) {}

VertexId MultiGraph::add_vertex() {
  adj_.emplace_back();
  loops_.push_back(0);
  alive_.push_back(true);
  ++n_;
  return static_cast<VertexId>(alive_.size() - 1);
}

void MultiGraph::check_vertex(VertexId v) const {
  if (!contains(v)) {
    throw Error(ErrorCode::kInvalidArgument, "unknown vertex id " + std::to_string(v));
  }
}

int& MultiGraph::link(VertexId u, VertexId v) {
  auto& list = adj_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, VertexId id) { return a.id < id; });
  if (it == list.end() || it->id != v) it = list.insert(it, Neighbor{v, 0});
  return it->multiplicity;
}

void MultiGraph::add_edge(VertexId u, VertexId v, int multiplicity) {
  check_vertex(u);
  check_vertex(v);
  if (multiplicity < 0) throw Error(ErrorCode::kInvalidArgument, "negative multiplicity");
  if (multiplicity == 0) return;
  if (u == v) {
    loops_[u] += multiplicity;
  } else {
    link(u, v) += multiplicity;
    link(v, u) += multiplicity;
  }
  m_ += static_cast<std::size_t>(multiplicity);
}

void MultiGraph::set_multiplicity(VertexId u, VertexId v, int multiplicity) {
  check_vertex(u);
  check_vertex(v);
  if (multiplicity < 0) throw Error(ErrorCode::kInvalidArgument, "negative multiplicity");
  int current = this->multiplicity(u, v);
  if (current == multiplicity) return;
  if (u == v) {
    loops_[u] = multiplicity;
  } else if (multiplicity == 0) {
    auto drop = [](std::vector<Neighbor>& list, VertexId id) {
      list.erase(std::find_if(list.begin(), list.end(), [id](const Neighbor& x) { return x.id == id; }));
    };
    drop(adj_[u], v);
    drop(adj_[v], u);
  } else {
    link(u, v) = multiplicity;
    link(v, u) = multiplicity;
  }
  m_ = m_ - static_cast<std::size_t>(current) + static_cast<std::size_t>(multiplicity);
}

void MultiGraph::remove_vertex(VertexId v) {
  check_vertex(v);
  for (const Neighbor& nb : adj_[v]) {
    auto& list = adj_[nb.id];
    list.erase(std::find_if(list.begin(), list.end(), [v](const Neighbor& x) { return x.id == v; }));
    m_ -= static_cast<std::size_t>(nb.multiplicity);
  }
  m_ -= static_cast<std::size_t>(loops_[v]);
  adj_[v].clear();
  loops_[v] = 0;
  alive_[v] = false;
  --n_;
}

int MultiGraph::degree(VertexId v) const {
  check_vertex(v);
  int d = 2 * loops_[v];
  for (const Neighbor& nb : adj_[v]) d += nb.multiplicity;
  return d;
}

int MultiGraph::loops(VertexId v) const {
  check_vertex(v);
  return loops_[v];
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return loops_[u];
  const auto& list = adj_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, VertexId id) { return a.id < id; });
  return (it != list.end() && it->id == v) ? it->multiplicity : 0;
}

std::span<const Neighbor> MultiGraph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<VertexId> MultiGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(n_);
  for (VertexId v = 0; v < alive_.size(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

VertexSet MultiGraph::vertex_set() const { return VertexSet(vertices()); }

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  VertexId find(VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<VertexId> parent;
};

}  // namespace

bool is_forest(const MultiGraph& g) {
  DisjointSets sets(g.id_bound());
  for (VertexId v : g.vertices()) {
    if (g.loops(v) > 0) return false;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.id < v) continue;
      if (nb.multiplicity > 1 || !sets.unite(v, nb.id)) return false;
    }
  }
  return true;
}

std::vector<VertexSet> connected_components(const MultiGraph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.id_bound(), false);
  std::vector<VertexId> stack;
  for (VertexId root : g.vertices()) {
    if (seen[root]) continue;
    std::vector<VertexId> members;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const Neighbor& nb : g.neighbors(v)) {
        if (!seen[nb.id]) {
          seen[nb.id] = true;
          stack.push_back(nb.id);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

std::size_t component_count(const MultiGraph& g) {
  DisjointSets sets(g.id_bound());
  std::size_t count = g.vertex_count();
  for (VertexId v : g.vertices()) {
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.id > v && sets.unite(v, nb.id)) --count;
    }
  }
  return count;
}

MultiGraph induced(const MultiGraph& g, const VertexSet& s) {
  MultiGraph out(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!s.contains(v)) {
      out.remove_vertex(v);
    } else if (!g.contains(v)) {
      throw Error(ErrorCode::kInvalidArgument, "induced: unknown vertex id " + std::to_string(v));
    }
  }
  for (VertexId v : s) {
    if (int l = g.loops(v); l > 0) out.add_edge(v, v, l);
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.id > v && s.contains(nb.id)) out.add_edge(v, nb.id, nb.multiplicity);
    }
  }
  return out;
}

MultiGraph without(const MultiGraph& g, const VertexSet& s) {
  MultiGraph out = g;
  for (VertexId v : s) {
    if (out.contains(v)) out.remove_vertex(v);
  }
  return out;
}

int degree_sum(const MultiGraph& g, const VertexSet& s) {
  int total = 0;
  for (VertexId v : s) total += g.degree(v);
  return total;
}

std::size_t edges_between(const MultiGraph& g, const VertexSet& s, const VertexSet& t) {
  std::size_t count = 0;
  for (VertexId u : s) {
    if (!g.contains(u)) continue;
    if (t.contains(u)) count += static_cast<std::size_t>(g.loops(u));
    for (const Neighbor& nb : g.neighbors(u)) {
      if (!t.contains(nb.id)) continue;
      // An edge with both endpoints in s ∩ t is seen from both sides.
      if (s.contains(nb.id) && t.contains(u) && nb.id < u) continue;
      count += static_cast<std::size_t>(nb.multiplicity);
    }
  }
  return count;
}

}  // namespace fvs
