#include "fvskit/separators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

#include "fvskit/error.hpp"

namespace fvs {

namespace {

void require_fvs(const MultiGraph& g, const VertexSet& f, const char* where) {
  for (VertexId v : f) {
    if (!g.contains(v)) throw Error(ErrorCode::kInvalidArgument, std::string(where) + ": vertex outside graph");
  }
  if (!is_forest(without(g, f))) {
    throw Error(ErrorCode::kNotFeedbackVertexSet, std::string(where) + ": f is not a feedback vertex set");
  }
}

std::vector<std::int64_t> fvs_edge_weights(const MultiGraph& g, const VertexSet& f) {
  std::vector<std::int64_t> w(g.id_bound(), 0);
  for (VertexId v : g.vertices()) {
    if (f.contains(v)) continue;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (f.contains(nb.id)) w[v] += nb.multiplicity;
    }
  }
  return w;
}

std::vector<std::size_t> beta_candidates(std::size_t k, const SeparatorOptions& options) {
  std::size_t top = default_beta(k);
  std::vector<std::size_t> betas{top};
  if (options.scan_beta) {
    for (std::size_t b = 1; b < top; b *= 2) betas.push_back(b);
  }
  return betas;
}

}  // namespace

int TreeDecomposition::width() const {
  int w = -1;
  for (const VertexSet& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

std::size_t default_beta(std::size_t k) {
  if (k == 0) return 1;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(k), 0.99))));
}

VertexSet forest_balanced_separator(const MultiGraph& forest, const std::vector<std::int64_t>& weight,
                                    std::size_t beta) {
  if (beta == 0) throw Error(ErrorCode::kInvalidArgument, "forest_balanced_separator: beta must be positive");
  if (!is_forest(forest)) throw Error(ErrorCode::kInvalidArgument, "forest_balanced_separator: not a forest");
  if (weight.size() < forest.id_bound()) {
    throw Error(ErrorCode::kInvalidArgument, "forest_balanced_separator: weight vector too short");
  }
  std::int64_t total = 0;
  for (VertexId v : forest.vertices()) {
    if (weight[v] < 0) throw Error(ErrorCode::kInvalidArgument, "forest_balanced_separator: negative weight");
    total += weight[v];
  }
  const auto b = static_cast<std::int64_t>(beta);

  // Preorder per tree (root = minimum id, children by id); reverse preorder
  // visits every vertex after all of its descendants.
  std::vector<VertexId> preorder;
  std::vector<VertexId> parent(forest.id_bound(), 0);
  std::vector<bool> seen(forest.id_bound(), false);
  std::vector<VertexId> stack;
  for (VertexId root : forest.vertices()) {
    if (seen[root]) continue;
    seen[root] = true;
    parent[root] = root;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      preorder.push_back(v);
      auto nbs = forest.neighbors(v);
      for (auto it = nbs.rbegin(); it != nbs.rend(); ++it) {
        if (!seen[it->id]) {
          seen[it->id] = true;
          parent[it->id] = v;
          stack.push_back(it->id);
        }
      }
    }
  }

  VertexSet cut;
  std::vector<std::int64_t> remaining(forest.id_bound(), 0);
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    VertexId v = *it;
    remaining[v] += weight[v];
    if (remaining[v] * b > total) {
      cut.insert(v);
    } else if (parent[v] != v) {
      remaining[parent[v]] += remaining[v];
    }
  }
  return cut;
}

ConstraintBipartite build_constraint_bipartite(const MultiGraph& g, const VertexSet& f, const VertexSet& s_eps) {
  require_fvs(g, f, "build_constraint_bipartite");
  if (!f.intersected(s_eps).empty()) {
    throw Error(ErrorCode::kInvalidArgument, "build_constraint_bipartite: s_eps intersects f");
  }
  ConstraintBipartite h;
  h.f = f;
  h.f_neighbors.resize(f.size());
  auto f_index = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(f.begin(), f.end(), v) - f.begin());
  };

  MultiGraph rest = without(g, f.united(s_eps));
  h.components = connected_components(rest);
  for (const VertexSet& comp : h.components) {
    VertexSet touching;
    for (VertexId v : comp) {
      for (const Neighbor& nb : g.neighbors(v)) {
        if (f.contains(nb.id)) touching.insert(nb.id);
      }
    }
    std::size_t r = h.r_neighbors.size();
    h.r_neighbors.emplace_back(touching.ids());
    for (VertexId u : touching) h.f_neighbors[f_index(u)].push_back(r);
  }
  for (VertexId u : f) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.id <= u || !f.contains(nb.id)) continue;
      std::size_t r = h.r_neighbors.size();
      h.subdivided_edges.emplace_back(u, nb.id);
      h.r_neighbors.push_back({u, nb.id});
      h.f_neighbors[f_index(u)].push_back(r);
      h.f_neighbors[f_index(nb.id)].push_back(r);
    }
  }
  return h;
}

namespace {

struct Candidate {
  VertexSet s_eps;
  ConstraintBipartite h;
};

std::vector<Candidate> separator_candidates(const MultiGraph& g, const VertexSet& f,
                                            const SeparatorOptions& options) {
  MultiGraph forest = without(g, f);
  std::vector<std::int64_t> w = fvs_edge_weights(g, f);
  std::vector<Candidate> out;
  for (std::size_t beta : beta_candidates(f.size(), options)) {
    VertexSet s_eps = forest_balanced_separator(forest, w, beta);
    bool duplicate = std::any_of(out.begin(), out.end(), [&](const Candidate& c) { return c.s_eps == s_eps; });
    if (duplicate) continue;
    ConstraintBipartite h = build_constraint_bipartite(g, f, s_eps);
    out.push_back({std::move(s_eps), std::move(h)});
  }
  return out;
}

}  // namespace

Separation two_way_separation(const MultiGraph& g, const VertexSet& f, Rng& rng, const SeparatorOptions& options) {
  require_fvs(g, f, "two_way_separation");
  std::vector<Candidate> candidates = separator_candidates(g, f, options);
  const std::size_t attempts = std::max<std::size_t>(1, options.attempts);

  std::optional<Separation> best;
  std::tuple<std::size_t, std::size_t> best_score{};
  std::bernoulli_distribution coin(0.5);
  for (const Candidate& cand : candidates) {
    const ConstraintBipartite& h = cand.h;
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
      std::vector<bool> red(h.right_size());
      for (std::size_t r = 0; r < red.size(); ++r) red[r] = coin(rng);

      Separation sep;
      sep.s_eps = cand.s_eps;
      sep.s = cand.s_eps;
      for (std::size_t c = 0; c < h.component_count(); ++c) {
        VertexSet& side = red[c] ? sep.a : sep.b;
        side = side.united(h.components[c]);
      }
      std::size_t fi = 0;
      for (VertexId v : f) {
        const auto& nbs = h.f_neighbors[fi++];
        bool all_red = std::all_of(nbs.begin(), nbs.end(), [&](std::size_t r) { return red[r]; });
        bool all_blue = std::none_of(nbs.begin(), nbs.end(), [&](std::size_t r) { return red[r]; });
        if (all_red && all_blue) {
          (coin(rng) ? sep.a : sep.b).insert(v);
        } else if (all_red) {
          sep.a.insert(v);
        } else if (all_blue) {
          sep.b.insert(v);
        } else {
          sep.s.insert(v);
        }
      }
      SeparationStats st = separation_stats(sep, f);
      // Lower cost |S| + max side is better; ties prefer the larger minimum.
      std::tuple<std::size_t, std::size_t> score{st.s + std::max(st.a_f, st.b_f),
                                                 f.size() - std::min(st.a_f, st.b_f)};
      if (!best || score < best_score) {
        best = std::move(sep);
        best_score = score;
      }
    }
  }
  return *best;
}

ThreeWaySeparation three_way_separation(const MultiGraph& g, const VertexSet& f, Rng& rng,
                                        const SeparatorOptions& options) {
  require_fvs(g, f, "three_way_separation");
  std::vector<Candidate> candidates = separator_candidates(g, f, options);
  const std::size_t attempts = std::max<std::size_t>(1, options.attempts);

  std::optional<ThreeWaySeparation> best;
  std::size_t best_cost = 0;
  std::uniform_int_distribution<unsigned> colour(0, 2);
  for (const Candidate& cand : candidates) {
    const ConstraintBipartite& h = cand.h;
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
      std::vector<unsigned> col(h.right_size());
      for (auto& c : col) c = colour(rng);

      ThreeWaySeparation sep;
      sep.s_eps = cand.s_eps;
      sep[7] = cand.s_eps;
      for (std::size_t c = 0; c < h.component_count(); ++c) {
        unsigned mask = 1u << col[c];
        sep[mask] = sep[mask].united(h.components[c]);
      }
      std::size_t fi = 0;
      for (VertexId v : f) {
        unsigned mask = 0;
        for (std::size_t r : h.f_neighbors[fi]) mask |= 1u << col[r];
        ++fi;
        if (mask == 0) mask = 1u << colour(rng);
        sep[mask].insert(v);
      }
      // Largest trace one side has to enumerate, plus the shared core.
      std::size_t side_max = 0;
      for (unsigned i = 0; i < 3; ++i) {
        unsigned single = 1u << i;
        std::size_t side = sep[single].intersected(f).size();
        for (unsigned j = 0; j < 3; ++j) {
          if (j != i) side += sep[single | (1u << j)].size();
        }
        side_max = std::max(side_max, side);
      }
      std::size_t cost = sep[7].size() + side_max;
      if (!best || cost < best_cost) {
        best = std::move(sep);
        best_cost = cost;
      }
    }
  }
  return *best;
}

SeparationStats separation_stats(const Separation& sep, const VertexSet& f) {
  return {sep.a.intersected(f).size(), sep.b.intersected(f).size(), sep.s.size(), sep.s_eps.size()};
}

std::string check_separation(const MultiGraph& g, const Separation& sep) {
  VertexSet all = sep.a.united(sep.b).united(sep.s);
  if (all.size() != sep.a.size() + sep.b.size() + sep.s.size()) return "classes overlap";
  if (all != g.vertex_set()) return "classes do not cover V";
  for (VertexId u : sep.a) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if (sep.b.contains(nb.id)) {
        std::ostringstream os;
        os << "edge {" << u << "," << nb.id << "} joins A and B";
        return os.str();
      }
    }
  }
  return {};
}

std::string check_separation(const MultiGraph& g, const ThreeWaySeparation& sep) {
  std::size_t total = 0;
  VertexSet all;
  std::vector<unsigned> mask_of(g.id_bound(), 0);
  for (unsigned m = 1; m < 8; ++m) {
    total += sep[m].size();
    all = all.united(sep[m]);
    for (VertexId v : sep[m]) {
      if (v < mask_of.size()) mask_of[v] = m;
    }
  }
  if (all.size() != total) return "classes overlap";
  if (all != g.vertex_set()) return "classes do not cover V";
  for (VertexId u : g.vertices()) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if ((mask_of[u] & mask_of[nb.id]) == 0) {
        std::ostringstream os;
        os << "edge {" << u << "," << nb.id << "} joins S_" << mask_of[u] << " and S_" << mask_of[nb.id];
        return os.str();
      }
    }
  }
  return {};
}

TreeDecomposition tree_decomposition_from_fvs(const MultiGraph& g, const VertexSet& f, Rng& rng,
                                              const SeparatorOptions& options, Separation* used) {
  Separation sep = two_way_separation(g, f, rng, options);
  TreeDecomposition td;

  std::vector<std::size_t> centers;
  for (const VertexSet* side : {&sep.a, &sep.b}) {
    VertexSet added = side->intersected(f).united(sep.s);
    std::size_t center = td.bags.size();
    td.bags.push_back(added);
    centers.push_back(center);

    MultiGraph forest = induced(g, side->minus(f));
    std::vector<std::size_t> bag_of(g.id_bound(), 0);
    std::vector<bool> seen(g.id_bound(), false);
    for (VertexId root : forest.vertices()) {
      if (seen[root]) continue;
      seen[root] = true;
      VertexSet root_bag = added;
      root_bag.insert(root);
      bag_of[root] = td.bags.size();
      td.bags.push_back(std::move(root_bag));
      td.edges.emplace_back(center, bag_of[root]);
      std::vector<VertexId> stack{root};
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const Neighbor& nb : forest.neighbors(v)) {
          if (seen[nb.id]) continue;
          seen[nb.id] = true;
          VertexSet bag = added;
          bag.insert(v);
          bag.insert(nb.id);
          bag_of[nb.id] = td.bags.size();
          td.bags.push_back(std::move(bag));
          td.edges.emplace_back(bag_of[v], bag_of[nb.id]);
          stack.push_back(nb.id);
        }
      }
    }
  }
  td.edges.emplace_back(centers[0], centers[1]);
  if (used) *used = std::move(sep);
  return td;
}

DecompositionCheck validate_decomposition(const MultiGraph& g, const TreeDecomposition& td) {
  DecompositionCheck out;
  const std::size_t nodes = td.bags.size();
  auto fail = [&](std::string why) {
    out.valid = false;
    out.violation = std::move(why);
    return out;
  };

  if (nodes == 0) {
    if (g.empty()) {
      out.valid = true;
      return out;
    }
    return fail("no bags");
  }
  if (td.edges.size() != nodes - 1) return fail("tree edge count is not #bags - 1");
  std::vector<std::vector<std::size_t>> tree(nodes);
  for (auto [x, y] : td.edges) {
    if (x >= nodes || y >= nodes) return fail("tree edge references a missing bag");
    tree[x].push_back(y);
    tree[y].push_back(x);
  }
  {
    std::vector<bool> seen(nodes, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : tree[x]) {
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != nodes) return fail("bag tree is disconnected");
  }

  std::vector<std::vector<std::size_t>> holders(g.id_bound());
  for (std::size_t x = 0; x < nodes; ++x) {
    for (VertexId v : td.bags[x]) {
      if (!g.contains(v)) return fail("bag " + std::to_string(x) + " holds unknown vertex " + std::to_string(v));
      holders[v].push_back(x);
    }
  }
  for (VertexId v : g.vertices()) {
    if (holders[v].empty()) return fail("vertex " + std::to_string(v) + " is in no bag");
  }
  for (VertexId u : g.vertices()) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.id < u) continue;
      bool covered = std::any_of(holders[u].begin(), holders[u].end(),
                                 [&](std::size_t x) { return td.bags[x].contains(nb.id); });
      if (!covered) return fail("edge {" + std::to_string(u) + "," + std::to_string(nb.id) + "} is in no bag");
    }
  }
  for (VertexId v : g.vertices()) {
    std::vector<bool> in(nodes, false);
    for (std::size_t x : holders[v]) in[x] = true;
    std::vector<bool> seen(nodes, false);
    std::vector<std::size_t> stack{holders[v].front()};
    seen[holders[v].front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : tree[x]) {
        if (in[y] && !seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != holders[v].size()) {
      return fail("bags holding vertex " + std::to_string(v) + " are not connected");
    }
  }
  out.valid = true;
  out.width = td.width();
  return out;
}

void write_pace_td(std::ostream& os, const MultiGraph& g, const TreeDecomposition& td) {
  os << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << g.id_bound() << '\n';
  for (std::size_t x = 0; x < td.bags.size(); ++x) {
    os << "b " << x + 1;
    for (VertexId v : td.bags[x]) os << ' ' << v + 1;
    os << '\n';
  }
  for (auto [x, y] : td.edges) os << x + 1 << ' ' << y + 1 << '\n';
}

}  // namespace fvs
