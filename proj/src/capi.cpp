#include "fvskit/fvskit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "fvskit/error.hpp"
#include "fvskit/instance_io.hpp"
#include "fvskit/oracle.hpp"
#include "fvskit/separators.hpp"
#include "fvskit/solver.hpp"

struct fvs_graph {
  fvs::Instance instance;
};

struct fvs_result {
  std::optional<fvs::VertexSet> fvs;
  fvs::SolveStats stats;
  bool has_stats = false;
};

namespace {

thread_local std::string last_error;

fvs_status status_of(fvs::ErrorCode code) {
  switch (code) {
    case fvs::ErrorCode::kInvalidArgument:
      return FVS_ERR_INVALID_ARGUMENT;
    case fvs::ErrorCode::kParse:
      return FVS_ERR_PARSE;
    case fvs::ErrorCode::kBudgetExceeded:
      return FVS_ERR_BUDGET_EXCEEDED;
    case fvs::ErrorCode::kLimitExceeded:
      return FVS_ERR_LIMIT_EXCEEDED;
    case fvs::ErrorCode::kNotFeedbackVertexSet:
      return FVS_ERR_NOT_FVS;
  }
  return FVS_ERR_INTERNAL;
}

template <class F>
fvs_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return FVS_OK;
  } catch (const fvs::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return FVS_ERR_INTERNAL;
}

fvs_status invalid(const char* what) {
  last_error = what;
  return FVS_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fvs::VertexSet to_set(const fvs::MultiGraph& g, const uint32_t* vertices, size_t count) {
  fvs::VertexSet s;
  for (size_t i = 0; i < count; ++i) {
    if (!g.contains(vertices[i])) throw fvs::Error(fvs::ErrorCode::kInvalidArgument, "vertex id out of range");
    s.insert(vertices[i]);
  }
  return s;
}

fvs::SolverConfig to_config(const fvs_solver_config& c) {
  fvs::SolverConfig out;
  out.epsilon = c.epsilon;
  out.variant = c.variant == FVS_VARIANT_THREE_WAY ? fvs::DeciderVariant::kThreeWay : fvs::DeciderVariant::kSimple;
  out.seed = c.seed;
  out.budget_constant = c.budget_constant;
  out.trials = static_cast<std::size_t>(c.trials);
  out.separator_attempts = c.separator_attempts;
  out.faithful_coin = c.faithful_coin != 0;
  out.ic_threshold = c.ic_threshold;
  out.max_k = c.max_k;
  out.jobs = c.jobs;
  return out;
}

}  // namespace

extern "C" {

void fvs_solver_config_init(fvs_solver_config* config, fvs_variant variant) {
  if (!config) return;
  fvs::SolverConfig d = fvs::SolverConfig::for_variant(
      variant == FVS_VARIANT_THREE_WAY ? fvs::DeciderVariant::kThreeWay : fvs::DeciderVariant::kSimple);
  config->epsilon = d.epsilon;
  config->variant = variant;
  config->seed = d.seed;
  config->budget_constant = d.budget_constant;
  config->trials = d.trials;
  config->separator_attempts = static_cast<uint32_t>(d.separator_attempts);
  config->faithful_coin = d.faithful_coin ? 1 : 0;
  config->ic_threshold = d.ic_threshold;
  config->max_k = d.max_k;
  config->jobs = d.jobs;
}

fvs_status fvs_graph_create(size_t vertex_count, fvs_graph** out) {
  if (!out) return invalid("null output pointer");
  return guarded([&] { *out = new fvs_graph{fvs::Instance{fvs::MultiGraph(vertex_count), {}}}; });
}

void fvs_graph_free(fvs_graph* graph) { delete graph; }

fvs_status fvs_graph_add_edge(fvs_graph* graph, uint32_t u, uint32_t v) {
  if (!graph) return invalid("null graph");
  return guarded([&] {
    if (!graph->instance.graph.contains(u) || !graph->instance.graph.contains(v)) {
      throw fvs::Error(fvs::ErrorCode::kInvalidArgument, "vertex id out of range");
    }
    graph->instance.graph.add_edge(u, v);
  });
}

size_t fvs_graph_vertex_count(const fvs_graph* graph) { return graph ? graph->instance.graph.vertex_count() : 0; }
size_t fvs_graph_edge_count(const fvs_graph* graph) { return graph ? graph->instance.graph.edge_count() : 0; }

fvs_status fvs_graph_parse(const char* text, fvs_graph** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { *out = new fvs_graph{fvs::parse_instance_string(text)}; });
}

fvs_status fvs_graph_read_file(const char* path, fvs_graph** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] { *out = new fvs_graph{fvs::read_instance_file(path)}; });
}

fvs_status fvs_graph_write(const fvs_graph* graph, char** out) {
  if (!graph || !out) return invalid("null argument");
  return guarded([&] { *out = copy_string(fvs::instance_to_string(graph->instance.graph, graph->instance.comments)); });
}

fvs_status fvs_graph_comments(const fvs_graph* graph, char** out) {
  if (!graph || !out) return invalid("null argument");
  return guarded([&] {
    std::string joined;
    for (const std::string& c : graph->instance.comments) joined += c + '\n';
    *out = copy_string(joined);
  });
}

fvs_status fvs_solve(const fvs_graph* graph, uint32_t k, const fvs_solver_config* config, fvs_result** out) {
  if (!graph || !config || !out) return invalid("null argument");
  return guarded([&] {
    fvs::SolveResult r = fvs::solve(graph->instance.graph, k, to_config(*config));
    *out = new fvs_result{std::move(r.fvs), r.stats, true};
  });
}

void fvs_result_free(fvs_result* result) { delete result; }

int fvs_result_found(const fvs_result* result) { return result && result->fvs ? 1 : 0; }

size_t fvs_result_size(const fvs_result* result) { return result && result->fvs ? result->fvs->size() : 0; }

size_t fvs_result_vertices(const fvs_result* result, uint32_t* buffer, size_t capacity) {
  if (!result || !result->fvs) return 0;
  size_t i = 0;
  for (fvs::VertexId v : *result->fvs) {
    if (i < capacity && buffer) buffer[i] = v;
    ++i;
  }
  return i;
}

fvs_status fvs_result_stats(const fvs_result* result, char** out) {
  if (!result || !out) return invalid("null argument");
  return guarded([&] {
    std::ostringstream os;
    const fvs::SolveStats& s = result->stats;
    os << "found=" << (result->fvs ? 1 : 0) << '\n';
    os << "fvs_size=" << (result->fvs ? result->fvs->size() : 0) << '\n';
    if (result->has_stats) {
      os << "budget=" << s.budget << '\n'
         << "trials_used=" << s.trials_used << '\n'
         << "loops_deleted=" << s.reductions.loops_deleted << '\n'
         << "multiplicities_trimmed=" << s.reductions.multiplicities_trimmed << '\n'
         << "low_degree_deleted=" << s.reductions.low_degree_deleted << '\n'
         << "degree_two_contracted=" << s.reductions.degree_two_contracted << '\n'
         << "coin_heads=" << s.coin_heads << '\n'
         << "forced_heads=" << s.forced_heads << '\n'
         << "branch_steps=" << s.branch_steps << '\n'
         << "ic_runs=" << s.ic_runs << '\n'
         << "ic_cache_hits=" << s.ic_cache_hits << '\n'
         << "compressions=" << s.compressions << '\n'
         << "decider_draws=" << s.decider_draws << '\n'
         << "keys_scanned=" << s.keys_scanned << '\n'
         << "pruned=" << s.pruned << '\n'
         << "separator_balance=" << s.separator_balance << '\n'
         << "separator_max_s=" << s.separator_max_s << '\n';
    }
    *out = copy_string(os.str());
  });
}

fvs_status fvs_verify(const fvs_graph* graph, const uint32_t* vertices, size_t count, int* is_fvs) {
  if (!graph || !is_fvs || (count > 0 && !vertices)) return invalid("null argument");
  return guarded([&] {
    fvs::VertexSet s = to_set(graph->instance.graph, vertices, count);
    *is_fvs = fvs::verify_fvs(graph->instance.graph, s) ? 1 : 0;
  });
}

fvs_status fvs_oracle_min(const fvs_graph* graph, fvs_result** out) {
  if (!graph || !out) return invalid("null argument");
  return guarded([&] {
    fvs::MinFvs m = fvs::brute_min_fvs(graph->instance.graph);
    *out = new fvs_result{m.witness, {}, false};
  });
}

fvs_status fvs_tree_decomposition(const fvs_graph* graph, const uint32_t* fvs, size_t count, uint64_t seed,
                                  char** out) {
  if (!graph || !out || (count > 0 && !fvs)) return invalid("null argument");
  return guarded([&] {
    const fvs::MultiGraph& g = graph->instance.graph;
    fvs::VertexSet f = to_set(g, fvs, count);
    fvs::Rng rng(seed);
    fvs::TreeDecomposition td = fvs::tree_decomposition_from_fvs(g, f, rng);
    fvs::DecompositionCheck check = fvs::validate_decomposition(g, td);
    if (!check.valid) throw std::logic_error("invalid tree decomposition: " + check.violation);
    std::ostringstream os;
    fvs::write_pace_td(os, g, td);
    *out = copy_string(os.str());
  });
}

fvs_status fvs_generate(const char* family, uint64_t a, uint64_t b, double dbar, uint64_t seed, fvs_graph** out) {
  if (!family || !out) return invalid("null argument");
  return guarded([&] {
    const std::string name = family;
    fvs::Rng rng(seed);
    fvs::Instance inst;
    if (name == "cycle") {
      inst.graph = fvs::cycle_graph(a);
      inst.comments.push_back("cycle " + std::to_string(a));
    } else if (name == "disjoint-cycles") {
      inst.graph = fvs::disjoint_cycles(a, b);
      inst.comments.push_back("disjoint-cycles " + std::to_string(a) + " " + std::to_string(b));
    } else if (name == "random-gnm") {
      inst.graph = fvs::random_gnm(a, b, rng);
      inst.comments.push_back("random-gnm " + std::to_string(a) + " " + std::to_string(b) + " seed " +
                              std::to_string(seed));
    } else if (name == "planted-fvs") {
      fvs::PlantedInstance p = fvs::planted_fvs(a, b, dbar, rng);
      inst.graph = std::move(p.graph);
      std::ostringstream planted;
      planted << "planted";
      for (fvs::VertexId v : p.planted) planted << ' ' << v + 1;
      inst.comments.push_back("planted-fvs " + std::to_string(a) + " " + std::to_string(b) + " seed " +
                              std::to_string(seed));
      inst.comments.push_back(planted.str());
    } else {
      throw fvs::Error(fvs::ErrorCode::kInvalidArgument, "unknown family: " + name);
    }
    *out = new fvs_graph{std::move(inst)};
  });
}

const char* fvs_last_error(void) { return last_error.c_str(); }

void fvs_string_free(char* text) { std::free(text); }

}  // extern "C"
