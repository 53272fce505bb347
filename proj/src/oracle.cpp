#include "fvskit/oracle.hpp"

#include "fvskit/error.hpp"

namespace fvs {

MinFvs brute_min_fvs(const MultiGraph& g, const OracleLimit& limit) {
  const std::size_t n = g.vertex_count();
  if (n > limit.max_subset_n) throw Error(ErrorCode::kLimitExceeded, "brute_min_fvs: graph too large");
  const std::vector<VertexId> vs = g.vertices();
  for (std::size_t size = 0; size <= n; ++size) {
    // Lexicographic walk over size-subsets of positions.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      VertexSet s;
      for (std::size_t i : pick) s.insert(vs[i]);
      if (is_forest(without(g, s))) return {size, s};
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {n, g.vertex_set()};
}

bool verify_fvs(const MultiGraph& g, const VertexSet& s) {
  for (VertexId v : s) {
    if (!g.contains(v)) return false;
  }
  return is_forest(without(g, s));
}

CutObjectTable brute_cut_object_table(const MultiGraph& g, const IsolationWeights& weights, const VertexSet& fixed_f,
                                      const VertexSet& fixed_l, const VertexSet& fixed_r, const OracleLimit& limit) {
  const std::size_t n = g.vertex_count();
  if (n > limit.max_cut_object_n) throw Error(ErrorCode::kLimitExceeded, "brute_cut_objects: graph too large");
  const std::vector<VertexId> vs = g.vertices();

  struct Edge {
    std::size_t a;
    std::size_t b;
    std::size_t mult;
  };
  std::vector<std::size_t> index(g.id_bound(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = i;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (g.loops(vs[i]) > 0) edges.push_back({i, i, static_cast<std::size_t>(g.loops(vs[i]))});
    for (const Neighbor& nb : g.neighbors(vs[i])) {
      if (nb.id > vs[i]) edges.push_back({i, index[nb.id], static_cast<std::size_t>(nb.multiplicity)});
    }
  }

  // 0 = F, 1 = L, 2 = R; base-3 odometer over all vertices.
  std::vector<int> cls(n, 0);
  CutObjectTable out;
  while (true) {
    bool pinned_ok = true;
    for (std::size_t i = 0; i < n && pinned_ok; ++i) {
      VertexId v = vs[i];
      if (fixed_f.contains(v)) pinned_ok = cls[i] == 0;
      else if (fixed_l.contains(v)) pinned_ok = cls[i] == 1;
      else if (fixed_r.contains(v)) pinned_ok = cls[i] == 2;
    }
    if (pinned_ok) {
      bool cut_ok = true;
      std::size_t m_prime = 0;
      for (const Edge& e : edges) {
        int x = cls[e.a];
        int y = cls[e.b];
        if (x == 0 || y == 0) continue;
        if (x != y) {
          cut_ok = false;
          break;
        }
        m_prime += e.mult;
      }
      if (cut_ok) {
        std::size_t s = 0;
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (cls[i] == 0) {
            ++s;
            w += weights.omega_prime(vs[i]);
          }
        }
        ++out[{s, m_prime, w}];
      }
    }
    std::size_t i = 0;
    while (i < n && cls[i] == 2) cls[i++] = 0;
    if (i == n) break;
    ++cls[i];
  }
  return out;
}

std::uint64_t brute_cut_objects(const MultiGraph& g, const IsolationWeights& weights, std::size_t s,
                                std::size_t m_prime, std::uint64_t big_w, const OracleLimit& limit) {
  CutObjectTable table = brute_cut_object_table(g, weights, {}, {}, {}, limit);
  auto it = table.find({s, m_prime, big_w});
  return it == table.end() ? 0 : it->second;
}

}  // namespace fvs
