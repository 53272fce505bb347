#include <cmath>
#include <stdexcept>

#include "fvskit/cutcount.hpp"
#include "fvskit/error.hpp"
#include "fvskit/triangle_sum.hpp"

namespace fvs {

namespace {

std::vector<VertexId> concat(std::initializer_list<const VertexSet*> parts) {
  std::vector<VertexId> out;
  for (const VertexSet* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

std::vector<Place> concat_places(std::initializer_list<const std::vector<Place>*> parts) {
  std::vector<Place> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

void require_countable(const MultiGraph& g) {
  // Keeps every packed key field at or below packed::kMaxField.
  const std::size_t n = g.vertex_count();
  if (n > 63) throw Error(ErrorCode::kLimitExceeded, "cut&count: more than 63 vertices");
  if (2 * g.edge_count() > packed::kMaxField) throw Error(ErrorCode::kLimitExceeded, "cut&count: too many edges");
}

void require_fvs(const MultiGraph& g, const VertexSet& f) {
  if (!is_forest(without(g, f))) throw Error(ErrorCode::kNotFeedbackVertexSet, "cut&count: f is not a feedback vertex set");
}

}  // namespace

SimpleSeparationCounter::SimpleSeparationCounter(MultiGraph g, VertexSet f, Separation sep)
    : g_(std::move(g)), f_(std::move(f)), sep_(std::move(sep)) {
  require_countable(g_);
  require_fvs(g_, f_);
  if (std::string why = check_separation(g_, sep_); !why.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "SimpleSeparationCounter: " + why);
  }
  side_a_ = induced(g_, sep_.a.united(sep_.s));
  side_b_ = induced(g_, sep_.b.united(sep_.s));
}

CountTable SimpleSeparationCounter::count(const IsolationWeights& weights, const Forcing& forcing,
                                          const KeyLimits& limits) {
  const std::vector<VertexId> s = sep_.s.ids();
  VertexSet a_f = sep_.a.intersected(f_);
  VertexSet b_f = sep_.b.intersected(f_);
  ForestCounter side_a(side_a_, concat({&sep_.s, &a_f}), weights, forcing, limits);
  ForestCounter side_b(side_b_, concat({&sep_.s, &b_f}), weights, forcing, limits);

  CountTable total;
  for (const Placement& ps : enumerate_placements(g_, s, weights, forcing)) {
    if (!limits.admits(ps.key)) continue;
    CountTable ta = side_a.sum_extending(ps.places);
    if (ta.empty()) continue;
    CountTable tb = side_b.sum_extending(ps.places);
    if (tb.empty()) continue;
    // S contributes to both sides; remove one copy.
    CountTable both = convolve(ta, tb, limits.raised(ps.key));
    both.shift_down(ps.key);
    both.restrict(limits);
    total.add(both);
  }
  return total;
}

ThreeWayCounter::ThreeWayCounter(MultiGraph g, VertexSet f, ThreeWaySeparation sep)
    : g_(std::move(g)), f_(std::move(f)), sep_(std::move(sep)) {
  require_countable(g_);
  require_fvs(g_, f_);
  if (std::string why = check_separation(g_, sep_); !why.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "ThreeWayCounter: " + why);
  }
  for (unsigned c = 0; c < 3; ++c) {
    VertexSet side;
    for (unsigned mask = 1; mask < 8; ++mask) {
      if (mask & (1u << c)) side = side.united(sep_[mask]);
    }
    sides_[c] = induced(g_, side);
  }
}

CountTable ThreeWayCounter::count(const IsolationWeights& weights, const Forcing& forcing, const KeyLimits& limits) {
  const VertexSet& core = sep_[7];
  const VertexSet& s12 = sep_[3];
  const VertexSet& s13 = sep_[5];
  const VertexSet& s23 = sep_[6];
  VertexSet own1 = sep_[1].intersected(f_);
  VertexSet own2 = sep_[2].intersected(f_);
  VertexSet own3 = sep_[4].intersected(f_);
  // Trace order per side: core, then the two shared classes, then own F.
  ForestCounter side1(sides_[0], concat({&core, &s12, &s13, &own1}), weights, forcing, limits);
  ForestCounter side2(sides_[1], concat({&core, &s12, &s23, &own2}), weights, forcing, limits);
  ForestCounter side3(sides_[2], concat({&core, &s13, &s23, &own3}), weights, forcing, limits);

  CountTable total;
  for (const Placement& p0 : enumerate_placements(g_, core.ids(), weights, forcing)) {
    if (!limits.admits(p0.key)) continue;
    auto p12 = enumerate_placements(g_, s12.ids(), weights, forcing, core.ids(), p0.places);
    auto p13 = enumerate_placements(g_, s13.ids(), weights, forcing, core.ids(), p0.places);
    auto p23 = enumerate_placements(g_, s23.ids(), weights, forcing, core.ids(), p0.places);

    // X = placements of S_12, Y = of S_13, Z = of S_23. Each side keeps the
    // core once and drops the shared class it has to give up.
    TriPartiteWeightedGraph<CountTable> h;
    h.nx = p12.size();
    h.ny = p13.size();
    h.nz = p23.size();
    h.xy.resize(h.nx * h.ny);
    h.yz.resize(h.ny * h.nz);
    h.zx.resize(h.nz * h.nx);
    for (std::size_t x = 0; x < h.nx; ++x) {
      for (std::size_t y = 0; y < h.ny; ++y) {
        CountTable t = side1.sum_extending(concat_places({&p0.places, &p12[x].places, &p13[y].places}));
        t.shift_down(p12[x].key);
        h.xy[x * h.ny + y] = std::move(t);
      }
    }
    for (std::size_t z = 0; z < h.nz; ++z) {
      for (std::size_t x = 0; x < h.nx; ++x) {
        CountTable t = side2.sum_extending(concat_places({&p0.places, &p12[x].places, &p23[z].places}));
        t.shift_down(p23[z].key);
        h.zx[z * h.nx + x] = std::move(t);
      }
    }
    for (std::size_t y = 0; y < h.ny; ++y) {
      for (std::size_t z = 0; z < h.nz; ++z) {
        CountTable t = side3.sum_extending(concat_places({&p0.places, &p13[y].places, &p23[z].places}));
        t.shift_down(p13[y].key);
        h.yz[y * h.nz + z] = std::move(t);
      }
    }
    const std::uint64_t twice_core = 2 * p0.key;
    TableRing ring{limits.raised(twice_core)};
    CountTable tri = triangle_weighted_sum(h, ring);
    tri.shift_down(twice_core);
    tri.restrict(limits);
    total.add(tri);
  }
  return total;
}

DirectCounter::DirectCounter(MultiGraph g, VertexSet f) : g_(std::move(g)), f_(std::move(f)) {
  require_countable(g_);
  require_fvs(g_, f_);
}

CountTable DirectCounter::count(const IsolationWeights& weights, const Forcing& forcing, const KeyLimits& limits) {
  ForestCounter counter(g_, f_.ids(), weights, forcing, limits);
  return counter.sum_extending({});
}

bool key_accepts(std::uint64_t count, const CutCountKey& key, std::size_t n) {
  const long e = static_cast<long>(n) - static_cast<long>(key.s) - static_cast<long>(key.m) + 1;
  if (e < 1) return false;
  if (e >= 64) return count != 0;
  return (count & ((std::uint64_t{1} << e) - 1)) != 0;
}

std::uint64_t degree_budget(std::size_t k, double dbar) {
  return static_cast<std::uint64_t>(std::floor(dbar * static_cast<double>(k) + 1e-9));
}

std::optional<CutCountKey> first_accepting_key(const CountTable& table, std::size_t n, std::size_t k, double dbar,
                                               std::size_t* scanned) {
  const std::uint64_t max_d = degree_budget(k, dbar);
  std::size_t seen = 0;
  std::optional<CutCountKey> found;
  for (const auto& [packed_key, c] : table) {
    CutCountKey key = packed::unpack(packed_key);
    if (key.s > k || key.d > max_d) continue;
    ++seen;
    if (key_accepts(c, key, n)) {
      found = key;
      break;
    }
  }
  if (scanned) *scanned += seen;
  return found;
}

Decision decide(CountingProblem& problem, const DecideOptions& options, Rng& rng) {
  const MultiGraph& g = problem.graph();
  const std::size_t n = g.vertex_count();
  const std::size_t draws = options.draws > 0 ? options.draws : std::max<std::size_t>(1, 2 * n);
  const KeyLimits limits = KeyLimits::at_most(options.k, degree_budget(options.k, options.dbar));
  Decision decision;
  for (std::size_t t = 0; t < draws; ++t) {
    IsolationWeights w = draw_weights(g, rng);
    ++decision.draws_used;
    CountTable table = problem.count(w, Forcing(g.id_bound()), limits);
    if (auto key = first_accepting_key(table, n, options.k, options.dbar, &decision.keys_scanned)) {
      decision.accepted = true;
      decision.key = *key;
      decision.weights = std::move(w);
      return decision;
    }
  }
  return decision;
}

std::optional<VertexSet> reconstruct_witness(CountingProblem& problem, const Decision& decision,
                                             const DecideOptions& options) {
  if (!decision.accepted) return std::nullopt;
  const MultiGraph& g = problem.graph();
  const std::size_t n = g.vertex_count();
  const CutCountKey& key = decision.key;
  const std::uint64_t target = packed::make(key);
  const KeyLimits limits = KeyLimits::exactly(key);

  Forcing forcing(g.id_bound());
  VertexSet chosen;
  for (VertexId v : g.vertices()) {
    if (chosen.size() == key.s) {
      forcing.force_out(v);
      continue;
    }
    forcing.force_in(v);
    CountTable table = problem.count(decision.weights, forcing, limits);
    if (key_accepts(table.at(target), key, n)) {
      chosen.insert(v);
    } else {
      forcing.force_out(v);
    }
  }

  const bool valid = chosen.size() == key.s && static_cast<std::uint64_t>(degree_sum(g, chosen)) == key.d &&
                     chosen.size() <= options.k && key.d <= degree_budget(options.k, options.dbar) &&
                     is_forest(without(g, chosen));
  if (!valid) throw std::logic_error("reconstruct_witness: self-reduction produced an invalid set");
  return chosen;
}

std::optional<VertexSet> count_simple_separation(const MultiGraph& g, const VertexSet& f, std::size_t k,
                                                 double dbar, const Separation& sep, Rng& rng, Decision* decision) {
  SimpleSeparationCounter problem(g, f, sep);
  DecideOptions options{k, dbar, 0};
  Decision d = decide(problem, options, rng);
  std::optional<VertexSet> witness = reconstruct_witness(problem, d, options);
  if (decision) *decision = std::move(d);
  return witness;
}

std::optional<VertexSet> count_three_way(const MultiGraph& g, const VertexSet& f, std::size_t k, double dbar,
                                         const ThreeWaySeparation& sep, Rng& rng, Decision* decision) {
  ThreeWayCounter problem(g, f, sep);
  DecideOptions options{k, dbar, 0};
  Decision d = decide(problem, options, rng);
  std::optional<VertexSet> witness = reconstruct_witness(problem, d, options);
  if (decision) *decision = std::move(d);
  return witness;
}

std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, std::uint64_t> aggregate_by_combined_weight(
    const CountTable& table, std::size_t n) {
  std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, std::uint64_t> out;
  for (const auto& [packed_key, c] : table) {
    CutCountKey key = packed::unpack(packed_key);
    out[{key.s, key.m, key.combined_weight(n)}] += c;
  }
  std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
  return out;
}

}  // namespace fvs
