#include "fvskit/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "fvskit/cutcount.hpp"
#include "fvskit/error.hpp"
#include "fvskit/separators.hpp"

namespace fvs {

SolverConfig SolverConfig::for_variant(DeciderVariant variant) {
  SolverConfig c;
  c.variant = variant;
  c.epsilon = variant == DeciderVariant::kSimple ? kSimpleEpsilon : kThreeWayEpsilon;
  return c;
}

double SolverConfig::dbar() const { return (4.0 - 2.0 * epsilon) / (1.0 - epsilon); }

double SolverConfig::compression_exponent() const {
  const double d = dbar();
  if (variant == DeciderVariant::kSimple) return 1.0 - std::pow(2.0, -d);
  return 1.0 - ((3.0 - kMmExponent) * std::pow(2.0 / 3.0, d) + (2.0 * kMmExponent - 3.0) * std::pow(3.0, -d));
}

double SolverConfig::c_eps() const { return std::max(3.0 - epsilon, std::pow(3.0, compression_exponent())); }

void SolverConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1)");
  if (!(budget_constant > 0.0)) throw Error(ErrorCode::kInvalidArgument, "budget constant must be positive");
  if (ic_threshold < 0) throw Error(ErrorCode::kInvalidArgument, "ic threshold must be non-negative");
  if (max_k < 0) throw Error(ErrorCode::kInvalidArgument, "max k must be non-negative");
  if (separator_attempts == 0) throw Error(ErrorCode::kInvalidArgument, "separator attempts must be positive");
}

void SolveStats::merge(const SolveStats& o) {
  reductions.loops_deleted += o.reductions.loops_deleted;
  reductions.multiplicities_trimmed += o.reductions.multiplicities_trimmed;
  reductions.low_degree_deleted += o.reductions.low_degree_deleted;
  reductions.degree_two_contracted += o.reductions.degree_two_contracted;
  coin_heads += o.coin_heads;
  forced_heads += o.forced_heads;
  branch_steps += o.branch_steps;
  ic_runs += o.ic_runs;
  ic_cache_hits += o.ic_cache_hits;
  compressions += o.compressions;
  decider_draws += o.decider_draws;
  keys_scanned += o.keys_scanned;
  pruned += o.pruned;
  separator_balance = std::max(separator_balance, o.separator_balance);
  separator_max_s = std::max(separator_max_s, o.separator_max_s);
}

namespace {

void add_counts(RuleCounts& into, const RuleCounts& from) {
  into.loops_deleted += from.loops_deleted;
  into.multiplicities_trimmed += from.multiplicities_trimmed;
  into.low_degree_deleted += from.low_degree_deleted;
  into.degree_two_contracted += from.degree_two_contracted;
}

std::optional<VertexSet> compress_step(const MultiGraph& current, const MultiGraph& previous, const VertexSet& f,
                                       VertexId added, std::size_t k, double dbar, DeciderVariant variant, Rng& rng,
                                       const IcOptions& options, SolveStats* stats) {
  SeparatorOptions sep_options;
  sep_options.attempts = options.separator_attempts;
  DecideOptions decide_options{k, dbar, 0};
  VertexSet known = f;
  known.insert(added);

  std::unique_ptr<CountingProblem> problem;
  std::size_t balance = 0;
  std::size_t core = 0;
  if (variant == DeciderVariant::kSimple) {
    Separation sep = two_way_separation(previous, f, rng, sep_options);
    sep.s.insert(added);
    SeparationStats st = separation_stats(sep, known);
    balance = std::min(st.a_f, st.b_f);
    core = sep.s.size();
    problem = std::make_unique<SimpleSeparationCounter>(current, known, std::move(sep));
  } else {
    ThreeWaySeparation sep = three_way_separation(previous, f, rng, sep_options);
    sep[7].insert(added);
    balance = std::min({sep[1].intersected(known).size(), sep[2].intersected(known).size(),
                        sep[4].intersected(known).size()});
    core = sep[7].size();
    problem = std::make_unique<ThreeWayCounter>(current, known, std::move(sep));
  }
  Decision decision = decide(*problem, decide_options, rng);
  if (stats) {
    ++stats->compressions;
    stats->decider_draws += decision.draws_used;
    stats->keys_scanned += decision.keys_scanned;
    stats->separator_balance = std::max(stats->separator_balance, balance);
    stats->separator_max_s = std::max(stats->separator_max_s, core);
  }
  return reconstruct_witness(*problem, decision, decide_options);
}

/// Sum over the k largest (deg − 1) values must reach the cyclomatic number
/// m − n + cc, since deleting v lowers it by at most deg(v) − 1.
bool cyclomatic_feasible(const MultiGraph& g, std::size_t k) {
  std::vector<long> gain;
  for (VertexId v : g.vertices()) gain.push_back(static_cast<long>(g.degree(v)) - 1);
  std::sort(gain.rbegin(), gain.rend());
  long reach = 0;
  for (std::size_t i = 0; i < std::min(k, gain.size()); ++i) reach += std::max(0L, gain[i]);
  long cyclomatic = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) +
                    static_cast<long>(component_count(g));
  return reach >= cyclomatic;
}

std::string fingerprint(const MultiGraph& g, std::size_t k) {
  std::string key = std::to_string(k) + ':';
  for (VertexId v : g.vertices()) {
    key += std::to_string(v);
    if (g.loops(v) > 0) key += "@" + std::to_string(g.loops(v));
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.id < v) continue;
      key += ',' + std::to_string(nb.id);
      if (nb.multiplicity > 1) key += 'x' + std::to_string(nb.multiplicity);
    }
    key += ';';
  }
  return key;
}

}  // namespace

std::optional<VertexSet> iterative_compression(const MultiGraph& g, std::size_t k, double dbar,
                                               DeciderVariant variant, Rng& rng, const IcOptions& options,
                                               SolveStats* stats) {
  const std::uint64_t budget = degree_budget(k, dbar);
  VertexSet prefix;
  VertexSet f;
  MultiGraph previous = induced(g, prefix);
  for (VertexId v : g.vertices()) {
    prefix.insert(v);
    MultiGraph current = induced(g, prefix);
    if (is_forest(without(current, f)) && static_cast<std::uint64_t>(degree_sum(current, f)) <= budget) {
      previous = std::move(current);
      continue;
    }
    VertexSet grown = f;
    grown.insert(v);
    if (grown.size() <= k && static_cast<std::uint64_t>(degree_sum(current, grown)) <= budget) {
      f = std::move(grown);
      previous = std::move(current);
      continue;
    }
    std::optional<VertexSet> next = compress_step(current, previous, f, v, k, dbar, variant, rng, options, stats);
    if (!next) return std::nullopt;
    f = std::move(*next);
    previous = std::move(current);
  }
  return f;
}

class SolveContext {
 public:
  explicit SolveContext(const SolverConfig& config) : config_(config) {}

  const SolverConfig& config() const { return config_; }

  std::optional<VertexSet> compress(const MultiGraph& g, std::size_t k, SolveStats& stats) {
    std::string key = fingerprint(g, k);
    if (config_.memoize) {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        ++stats.ic_cache_hits;
        return it->second;
      }
    }
    // The stream depends only on the subproblem, so memoized and fresh runs agree.
    Rng rng(derive_seed(config_.seed, std::hash<std::string>{}(key)));
    ++stats.ic_runs;
    IcOptions options{config_.separator_attempts};
    std::optional<VertexSet> result = iterative_compression(g, k, config_.dbar(), config_.variant, rng, options, &stats);
    if (config_.memoize) {
      std::lock_guard<std::mutex> lock(mutex_);
      memo_.emplace(std::move(key), result);
    }
    return result;
  }

 private:
  SolverConfig config_;
  std::mutex mutex_;
  std::unordered_map<std::string, std::optional<VertexSet>> memo_;
};

namespace {

std::optional<VertexSet> run_trial(const MultiGraph& input, std::size_t k_input, SolveContext& ctx, Rng& rng,
                                   SolveStats& stats) {
  const SolverConfig& config = ctx.config();
  MultiGraph g = input;
  std::size_t k = k_input;
  VertexSet chosen;
  while (true) {
    if (k == 0) {
      if (is_forest(g)) return chosen;
      return std::nullopt;
    }
    ReductionOutcome reduced = reduce_exhaustive(g, static_cast<int>(k));
    add_counts(stats.reductions, reduced.fired);
    if (reduced.infeasible) return std::nullopt;
    chosen = chosen.united(reduced.forced);
    g = std::move(reduced.graph);
    k = static_cast<std::size_t>(reduced.budget);
    if (g.empty()) return chosen;
    if (k == 0) return std::nullopt;
    if (config.cyclomatic_prune && !cyclomatic_feasible(g, k)) {
      ++stats.pruned;
      return std::nullopt;
    }

    bool heads = false;
    if (config.faithful_coin) {
      std::bernoulli_distribution coin(std::pow(3.0, -config.compression_exponent() * static_cast<double>(k)));
      heads = coin(rng);
    } else {
      heads = k <= static_cast<std::size_t>(config.ic_threshold);
    }
    bool compressed = false;
    if (heads) {
      ++stats.coin_heads;
      compressed = true;
      if (auto found = ctx.compress(g, k, stats)) return chosen.united(*found);
      if (config.faithful_coin) return std::nullopt;
    }

    VertexId v = 0;
    if (static_cast<double>(g.vertex_count()) <= (3.0 - config.epsilon) * static_cast<double>(k)) {
      v = sample_uniform(g, rng);
    } else if (auto sampled = sample_degree_weighted(g, rng)) {
      v = *sampled;
    } else {
      // 3-regular: every FVS has degree 3k, so compression alone is exact.
      ++stats.forced_heads;
      if (compressed) return std::nullopt;
      if (auto found = ctx.compress(g, k, stats)) return chosen.united(*found);
      return std::nullopt;
    }
    ++stats.branch_steps;
    chosen.insert(v);
    g.remove_vertex(v);
    --k;
  }
}

void check_answer(const MultiGraph& g, std::size_t k, const VertexSet& f) {
  for (VertexId v : f) {
    if (!g.contains(v)) throw std::logic_error("solver returned a vertex outside the graph");
  }
  if (f.size() > k || !is_forest(without(g, f))) throw std::logic_error("solver returned an invalid feedback vertex set");
}

}  // namespace

std::optional<VertexSet> fvs_trial(const MultiGraph& g, std::size_t k, const SolverConfig& config, Rng& rng,
                                   SolveStats* stats) {
  config.validate();
  SolverConfig local = config;
  local.memoize = false;
  SolveContext ctx(local);
  SolveStats scratch;
  std::optional<VertexSet> result = run_trial(g, k, ctx, rng, stats ? *stats : scratch);
  if (result) check_answer(g, k, *result);
  return result;
}

SolveResult solve(const MultiGraph& g, std::size_t k, const SolverConfig& config) {
  config.validate();
  if (k > static_cast<std::size_t>(config.max_k)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "k = " + std::to_string(k) + " exceeds the configured maximum " + std::to_string(config.max_k));
  }
  SolveResult result;
  ReductionOutcome top = reduce_exhaustive(g, static_cast<int>(std::min<std::size_t>(k, g.vertex_count())));
  add_counts(result.stats.reductions, top.fired);
  if (top.infeasible) return result;
  if (top.graph.empty()) {
    check_answer(g, k, top.forced);
    result.fvs = top.forced;
    return result;
  }
  const double kr = static_cast<double>(top.budget);
  std::size_t budget = config.trials;
  if (budget == 0) {
    double raw = std::ceil(config.budget_constant * std::pow(config.c_eps(), kr) * kr);
    budget = raw >= 1e12 ? static_cast<std::size_t>(1e12) : std::max<std::size_t>(1, static_cast<std::size_t>(raw));
  }
  result.stats.budget = budget;

  SolveContext ctx(config);
  const unsigned jobs = std::max(1u, config.jobs);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::mutex mutex;
  std::optional<VertexSet> answer;
  SolveStats merged;

  auto worker = [&]() {
    SolveStats local;
    while (true) {
      std::size_t t = next.fetch_add(1);
      if (t >= budget || t > best.load()) break;
      Rng rng(derive_seed(config.seed, t));
      std::optional<VertexSet> found = run_trial(g, k, ctx, rng, local);
      if (found) {
        std::lock_guard<std::mutex> lock(mutex);
        if (t < best.load()) {
          best = t;
          answer = std::move(found);
        }
      }
    }
    std::lock_guard<std::mutex> lock(mutex);
    merged.merge(local);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  merged.budget = budget;
  merged.trials_used = answer ? best.load() + 1 : budget;
  RuleCounts top_counts = result.stats.reductions;
  result.stats = merged;
  add_counts(result.stats.reductions, top_counts);
  if (answer) {
    check_answer(g, k, *answer);
    result.fvs = std::move(answer);
  }
  return result;
}

}  // namespace fvs
