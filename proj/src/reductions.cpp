#include "fvskit/reductions.hpp"

#include "fvskit/error.hpp"

namespace fvs {

namespace {

enum class Rule { kNone, kLoop, kMultiplicity, kLowDegree, kDegreeTwo };

struct Match {
  Rule rule = Rule::kNone;
  VertexId v = 0;
  VertexId u = 0;
};

Match find_rule(const MultiGraph& g, const std::vector<VertexId>& order) {
  for (VertexId v : order) {
    if (g.contains(v) && g.loops(v) > 0) return {Rule::kLoop, v, v};
  }
  for (VertexId v : order) {
    if (!g.contains(v)) continue;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.multiplicity > 2) return {Rule::kMultiplicity, v, nb.id};
    }
  }
  for (VertexId v : order) {
    if (g.contains(v) && g.degree(v) <= 1) return {Rule::kLowDegree, v, v};
  }
  for (VertexId v : order) {
    if (g.contains(v) && g.degree(v) == 2) return {Rule::kDegreeTwo, v, v};
  }
  return {};
}

}  // namespace

ReductionOutcome reduce_exhaustive(const MultiGraph& g, int budget) {
  if (budget < 0) throw Error(ErrorCode::kInvalidArgument, "reduce_exhaustive: negative budget");
  ReductionOutcome out{g, budget, {}, false, {}};
  MultiGraph& h = out.graph;
  const std::vector<VertexId> order = g.vertices();

  for (Match match = find_rule(h, order); match.rule != Rule::kNone; match = find_rule(h, order)) {
    switch (match.rule) {
      case Rule::kLoop:
        h.remove_vertex(match.v);
        out.forced.insert(match.v);
        ++out.fired.loops_deleted;
        if (--out.budget < 0) {
          out.infeasible = true;
          return out;
        }
        break;
      case Rule::kMultiplicity:
        h.set_multiplicity(match.v, match.u, 2);
        ++out.fired.multiplicities_trimmed;
        break;
      case Rule::kLowDegree:
        h.remove_vertex(match.v);
        ++out.fired.low_degree_deleted;
        break;
      case Rule::kDegreeTwo: {
        auto nbs = h.neighbors(match.v);
        VertexId a = nbs.front().id;
        VertexId b = nbs.size() == 1 ? a : nbs.back().id;
        h.remove_vertex(match.v);
        h.add_edge(a, b);  // a == b yields a loop, handled by the next pass
        ++out.fired.degree_two_contracted;
        break;
      }
      case Rule::kNone:
        break;
    }
  }
  return out;
}

SampleWeights sample_weights(const MultiGraph& g) {
  SampleWeights w;
  w.vertices = g.vertices();
  w.weight.reserve(w.vertices.size());
  for (VertexId v : w.vertices) {
    std::int64_t x = g.degree(v) - 3;
    if (x < 0) throw Error(ErrorCode::kInvalidArgument, "sample_weights: graph is not reduced");
    w.weight.push_back(x);
    w.total += x;
  }
  return w;
}

std::optional<VertexId> sample_degree_weighted(const MultiGraph& g, Rng& rng) {
  SampleWeights w = sample_weights(g);
  if (w.total == 0) return std::nullopt;
  std::uniform_int_distribution<std::int64_t> pick(0, w.total - 1);
  std::int64_t r = pick(rng);
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (r < w.weight[i]) return w.vertices[i];
    r -= w.weight[i];
  }
  return w.vertices.back();
}

VertexId sample_uniform(const MultiGraph& g, Rng& rng) {
  if (g.empty()) throw Error(ErrorCode::kInvalidArgument, "sample_uniform: empty graph");
  std::vector<VertexId> vs = g.vertices();
  std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
  return vs[pick(rng)];
}

}  // namespace fvs
