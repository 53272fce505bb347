#include <algorithm>
#include <array>

#include "fvskit/cutcount.hpp"
#include "fvskit/error.hpp"

namespace fvs {

IsolationWeights draw_weights(const MultiGraph& g, Rng& rng) {
  IsolationWeights w;
  w.n = g.vertex_count();
  w.omega.assign(g.id_bound(), 0);
  w.degree.assign(g.id_bound(), 0);
  if (w.n == 0) return w;
  std::uniform_int_distribution<std::uint32_t> pick(1, static_cast<std::uint32_t>(2 * w.n));
  for (VertexId v : g.vertices()) {
    w.omega[v] = pick(rng);
    w.degree[v] = static_cast<std::uint32_t>(g.degree(v));
  }
  return w;
}

namespace {

constexpr std::size_t kMaxCachedNeighbours = 40;

bool same_side(Place a, Place b) { return a == b && a != Place::kF; }
bool opposite_sides(Place a, Place b) { return a != Place::kF && b != Place::kF && a != b; }

}  // namespace

ForestCounter::ForestCounter(const MultiGraph& h, std::vector<VertexId> trace, const IsolationWeights& weights,
                             const Forcing& forcing, const KeyLimits& limits)
    : h_(&h), trace_(std::move(trace)), weights_(&weights), forcing_(forcing), limits_(limits) {
  trace_pos_.assign(h.id_bound(), -1);
  for (std::size_t j = 0; j < trace_.size(); ++j) {
    VertexId t = trace_[j];
    if (!h.contains(t)) throw Error(ErrorCode::kInvalidArgument, "ForestCounter: trace vertex outside graph");
    if (trace_pos_[t] >= 0) throw Error(ErrorCode::kInvalidArgument, "ForestCounter: repeated trace vertex");
    trace_pos_[t] = static_cast<std::int64_t>(j);
  }

  std::vector<bool> seen(h.id_bound(), false);
  for (VertexId root : h.vertices()) {
    if (trace_pos_[root] >= 0 || seen[root]) continue;
    Tree tree;
    std::vector<std::pair<VertexId, std::int32_t>> stack{{root, -1}};
    seen[root] = true;
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      if (h.loops(v) > 0) throw Error(ErrorCode::kNotFeedbackVertexSet, "ForestCounter: loop outside the trace");
      Node node{v, parent, {}};
      auto nbs = h.neighbors(v);
      for (auto it = nbs.rbegin(); it != nbs.rend(); ++it) {
        VertexId u = it->id;
        if (trace_pos_[u] >= 0) {
          node.links.push_back({static_cast<std::uint32_t>(trace_pos_[u]), static_cast<std::uint32_t>(it->multiplicity)});
          tree.trace_neighbours.push_back(static_cast<std::uint32_t>(trace_pos_[u]));
          continue;
        }
        bool is_parent = parent >= 0 && tree.nodes[parent].id == u;
        if (is_parent) {
          if (it->multiplicity > 1) throw Error(ErrorCode::kNotFeedbackVertexSet, "ForestCounter: parallel edge outside the trace");
          continue;
        }
        if (seen[u] || it->multiplicity > 1) {
          throw Error(ErrorCode::kNotFeedbackVertexSet, "ForestCounter: trace is not a feedback vertex set");
        }
        seen[u] = true;
        stack.emplace_back(u, static_cast<std::int32_t>(tree.nodes.size()));
      }
      tree.nodes.push_back(std::move(node));
    }
    std::sort(tree.trace_neighbours.begin(), tree.trace_neighbours.end());
    tree.trace_neighbours.erase(std::unique(tree.trace_neighbours.begin(), tree.trace_neighbours.end()),
                                tree.trace_neighbours.end());
    trees_.push_back(std::move(tree));
  }

  // Trees without trace neighbours do not depend on the assignment.
  free_part_ = CountTable::unit();
  std::vector<Tree> dependent;
  for (Tree& tree : trees_) {
    if (tree.trace_neighbours.empty()) {
      free_part_ = convolve(free_part_, tree_table(tree, {}), limits_);
    } else {
      dependent.push_back(std::move(tree));
    }
  }
  trees_ = std::move(dependent);
}

CountTable ForestCounter::tree_table(Tree& tree, std::span<const Place> assignment) {
  std::uint64_t code = 0;
  const bool cacheable = tree.trace_neighbours.size() <= kMaxCachedNeighbours;
  if (cacheable) {
    for (auto it = tree.trace_neighbours.rbegin(); it != tree.trace_neighbours.rend(); ++it) {
      code = code * 3 + static_cast<std::uint64_t>(assignment[*it]);
    }
    auto hit = tree.cache.find(code);
    if (hit != tree.cache.end()) {
      ++cache_hits_;
      return hit->second;
    }
  }

  const std::size_t count = tree.nodes.size();
  std::vector<std::array<CountTable, 3>> table(count);
  for (std::size_t x = 0; x < count; ++x) {
    const Node& node = tree.nodes[x];
    std::uint64_t m_left = 0;
    std::uint64_t m_right = 0;
    bool sees_left = false;
    bool sees_right = false;
    for (const TraceLink& link : node.links) {
      Place p = assignment[link.trace_index];
      if (p == Place::kL) {
        sees_left = true;
        m_left += link.multiplicity;
      } else if (p == Place::kR) {
        sees_right = true;
        m_right += link.multiplicity;
      }
    }
    auto seed = [&](Place p, std::uint64_t key) {
      if (forcing_.allows(node.id, p) && limits_.admits(key)) table[x][static_cast<int>(p)] = CountTable::unit(key);
    };
    seed(Place::kF, weights_->f_key(node.id));
    if (!sees_right) seed(Place::kL, m_left * packed::m_unit());
    if (!sees_left) seed(Place::kR, m_right * packed::m_unit());
  }

  for (std::size_t x = count; x-- > 1;) {
    auto& child = table[x];
    auto& parent = table[static_cast<std::size_t>(tree.nodes[x].parent)];
    CountTable any = sum(sum(child[0], child[1]), child[2]);
    CountTable left = child[1];
    left.shift_up(packed::m_unit());
    left.restrict(limits_);
    left.add(child[0]);
    CountTable right = child[2];
    right.shift_up(packed::m_unit());
    right.restrict(limits_);
    right.add(child[0]);
    parent[0] = convolve(parent[0], any, limits_);
    parent[1] = convolve(parent[1], left, limits_);
    parent[2] = convolve(parent[2], right, limits_);
  }
  CountTable total = sum(sum(table[0][0], table[0][1]), table[0][2]);
  if (cacheable) tree.cache.emplace(code, total);
  return total;
}

CountTable ForestCounter::extension(std::span<const Place> assignment) {
  if (assignment.size() != trace_.size()) throw Error(ErrorCode::kInvalidArgument, "ForestCounter: assignment size");
  CountTable result = free_part_;
  for (Tree& tree : trees_) {
    if (result.empty()) break;
    result = convolve(result, tree_table(tree, assignment), limits_);
  }
  return result;
}

std::optional<std::uint64_t> ForestCounter::trace_key(std::span<const Place> assignment) const {
  if (assignment.size() != trace_.size()) throw Error(ErrorCode::kInvalidArgument, "ForestCounter: assignment size");
  return trace_key_prefix(assignment, trace_.size());
}

CountTable ForestCounter::full(std::span<const Place> assignment) {
  std::optional<std::uint64_t> key = trace_key(assignment);
  if (!key || !limits_.admits(*key)) return {};
  CountTable ext = extension(assignment);
  ext.shift_up(*key);
  ext.restrict(limits_);
  return ext;
}

CountTable ForestCounter::sum_extending(std::span<const Place> prefix) {
  if (prefix.size() > trace_.size()) throw Error(ErrorCode::kInvalidArgument, "ForestCounter: prefix too long");
  std::vector<Place> assignment(trace_.size(), Place::kF);
  std::copy(prefix.begin(), prefix.end(), assignment.begin());
  std::optional<std::uint64_t> key = trace_key_prefix(assignment, prefix.size());
  CountTable out;
  if (!key || !limits_.admits(*key)) return out;
  enumerate(assignment, prefix.size(), *key, out);
  return out;
}

std::optional<std::uint64_t> ForestCounter::trace_key_prefix(std::span<const Place> assignment,
                                                             std::size_t length) const {
  std::uint64_t key = 0;
  for (std::size_t j = 0; j < length; ++j) {
    std::optional<std::uint64_t> delta = placement_delta(assignment, j);
    if (!delta) return std::nullopt;
    key += *delta;
  }
  return key;
}

std::optional<std::uint64_t> ForestCounter::placement_delta(std::span<const Place> assignment, std::size_t j) const {
  VertexId t = trace_[j];
  Place p = assignment[j];
  if (!forcing_.allows(t, p)) return std::nullopt;
  if (p == Place::kF) return weights_->f_key(t);
  std::uint64_t m = static_cast<std::uint64_t>(h_->loops(t));
  for (const Neighbor& nb : h_->neighbors(t)) {
    std::int64_t q = trace_pos_[nb.id];
    if (q < 0 || q >= static_cast<std::int64_t>(j)) continue;
    if (opposite_sides(p, assignment[q])) return std::nullopt;
    if (same_side(p, assignment[q])) m += static_cast<std::uint64_t>(nb.multiplicity);
  }
  return m * packed::m_unit();
}

void ForestCounter::enumerate(std::vector<Place>& assignment, std::size_t pos, std::uint64_t key, CountTable& out) {
  if (pos == trace_.size()) {
    CountTable ext = extension(assignment);
    ext.shift_up(key);
    ext.restrict(limits_);
    out.add(ext);
    return;
  }
  for (Place p : {Place::kF, Place::kL, Place::kR}) {
    assignment[pos] = p;
    std::optional<std::uint64_t> delta = placement_delta(assignment, pos);
    if (!delta || !limits_.admits(key + *delta)) continue;
    enumerate(assignment, pos + 1, key + *delta, out);
  }
}

CountTable forest_dp_table(const MultiGraph& g, const IsolationWeights& weights, const VertexSet& f,
                           const VertexSet& l, const VertexSet& r, const Forcing& forcing, const KeyLimits& limits) {
  VertexSet trace = f.united(l).united(r);
  if (trace.size() != f.size() + l.size() + r.size()) {
    throw Error(ErrorCode::kInvalidArgument, "forest_dp: F, L and R must be disjoint");
  }
  for (VertexId v : trace) {
    if (!g.contains(v)) throw Error(ErrorCode::kInvalidArgument, "forest_dp: vertex outside graph");
  }
  if (!is_forest(without(g, trace))) {
    throw Error(ErrorCode::kNotFeedbackVertexSet, "forest_dp: F ∪ L ∪ R is not a feedback vertex set");
  }
  std::vector<Place> assignment;
  for (VertexId v : trace) {
    assignment.push_back(f.contains(v) ? Place::kF : l.contains(v) ? Place::kL : Place::kR);
  }
  ForestCounter counter(g, trace.ids(), weights, forcing, limits);
  return counter.full(assignment);
}

std::uint64_t forest_dp(const MultiGraph& g, const IsolationWeights& weights, const VertexSet& f,
                        const VertexSet& l, const VertexSet& r, std::size_t s, std::size_t m_prime,
                        std::uint64_t big_w) {
  CountTable table = forest_dp_table(g, weights, f, l, r);
  std::uint64_t total = 0;
  for (const auto& [packed_key, c] : table) {
    CutCountKey key = packed::unpack(packed_key);
    if (key.s == s && key.m == m_prime && key.combined_weight(weights.n) == big_w) total += c;
  }
  return total;
}

std::vector<Placement> enumerate_placements(const MultiGraph& g, const std::vector<VertexId>& vertices,
                                            const IsolationWeights& weights, const Forcing& forcing,
                                            const std::vector<VertexId>& context,
                                            std::span<const Place> context_places) {
  if (context.size() != context_places.size()) {
    throw Error(ErrorCode::kInvalidArgument, "enumerate_placements: context size mismatch");
  }
  // Position of every relevant vertex: list vertices by index, context
  // vertices after them.
  std::vector<std::int64_t> pos(g.id_bound(), -1);
  for (std::size_t j = 0; j < vertices.size(); ++j) pos[vertices[j]] = static_cast<std::int64_t>(j);
  std::vector<Place> places(vertices.size() + context.size(), Place::kF);
  for (std::size_t j = 0; j < context.size(); ++j) {
    pos[context[j]] = static_cast<std::int64_t>(vertices.size() + j);
    places[vertices.size() + j] = context_places[j];
  }

  std::vector<Placement> out;
  auto recurse = [&](auto&& self, std::size_t j, std::uint64_t key) -> void {
    if (j == vertices.size()) {
      out.push_back({std::vector<Place>(places.begin(), places.begin() + static_cast<std::ptrdiff_t>(vertices.size())), key});
      return;
    }
    VertexId v = vertices[j];
    for (Place p : {Place::kF, Place::kL, Place::kR}) {
      if (!forcing.allows(v, p)) continue;
      places[j] = p;
      std::uint64_t delta = 0;
      bool ok = true;
      if (p == Place::kF) {
        delta = weights.f_key(v);
      } else {
        std::uint64_t m = static_cast<std::uint64_t>(g.loops(v));
        for (const Neighbor& nb : g.neighbors(v)) {
          std::int64_t q = pos[nb.id];
          bool placed = q >= 0 && (q < static_cast<std::int64_t>(j) || q >= static_cast<std::int64_t>(vertices.size()));
          if (!placed) continue;
          if (opposite_sides(p, places[q])) {
            ok = false;
            break;
          }
          if (same_side(p, places[q])) m += static_cast<std::uint64_t>(nb.multiplicity);
        }
        delta = m * packed::m_unit();
      }
      if (ok) self(self, j + 1, key + delta);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

}  // namespace fvs
