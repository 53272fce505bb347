// fvskit command-line front end. Talks to the library only through the C API.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fvskit/fvskit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitFailure = 1;

struct GraphDeleter {
  void operator()(fvs_graph* g) const { fvs_graph_free(g); }
};
struct ResultDeleter {
  void operator()(fvs_result* r) const { fvs_result_free(r); }
};
using GraphPtr = std::unique_ptr<fvs_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<fvs_result, ResultDeleter>;

int exit_code_for(fvs_status status) {
  switch (status) {
    case FVS_OK:
      return kExitOk;
    case FVS_ERR_PARSE:
    case FVS_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    case FVS_ERR_BUDGET_EXCEEDED:
      return kExitBudget;
    default:
      return kExitFailure;
  }
}

int report(fvs_status status) {
  std::cerr << "error: " << fvs_last_error() << '\n';
  return exit_code_for(status);
}

std::string take_string(char* text) {
  std::string out = text ? text : "";
  fvs_string_free(text);
  return out;
}

std::vector<uint32_t> result_vertices(const fvs_result* r) {
  std::vector<uint32_t> out(fvs_result_size(r));
  fvs_result_vertices(r, out.data(), out.size());
  return out;
}

struct SolveFlags {
  double epsilon = 0.0;
  std::string variant = "simple";
  uint64_t trials = 0;
  double budget_constant = 1.0;
  bool faithful_coin = false;
  int ic_threshold = 8;
  int max_k = 24;
  uint32_t jobs = 1;
  uint32_t attempts = 25;
};

void add_solver_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--epsilon", f.epsilon, "Branching parameter in (0,1); defaults per variant");
  cmd->add_option("--variant", f.variant, "Decider: simple (two-way) or mm (three-way)")
      ->check(CLI::IsMember({"simple", "mm"}));
  cmd->add_option("--trials", f.trials, "Trial budget (0 = derived from c^k·k)");
  cmd->add_option("--budget-constant", f.budget_constant, "Constant C in the trial budget C·c^k·k");
  cmd->add_flag("--faithful-coin", f.faithful_coin, "Flip the literal compression coin");
  cmd->add_option("--ic-threshold", f.ic_threshold, "Compress when k' is at most this (non-faithful mode)");
  cmd->add_option("--max-k", f.max_k, "Largest accepted k");
  cmd->add_option("--jobs", f.jobs, "Worker threads for independent trials")->check(CLI::PositiveNumber);
  cmd->add_option("--attempts", f.attempts, "Separator sampling attempts")->check(CLI::PositiveNumber);
}

fvs_solver_config make_config(const SolveFlags& f, uint64_t seed) {
  fvs_solver_config c;
  fvs_solver_config_init(&c, f.variant == "mm" ? FVS_VARIANT_THREE_WAY : FVS_VARIANT_SIMPLE);
  if (f.epsilon > 0.0) c.epsilon = f.epsilon;
  c.seed = seed;
  c.trials = f.trials;
  c.budget_constant = f.budget_constant;
  c.faithful_coin = f.faithful_coin ? 1 : 0;
  c.ic_threshold = f.ic_threshold;
  c.max_k = f.max_k;
  c.jobs = f.jobs;
  c.separator_attempts = f.attempts;
  return c;
}

int cmd_solve(const std::string& path, uint32_t k, const SolveFlags& flags, uint64_t seed, bool stats,
              const std::string& emit_td) {
  fvs_graph* raw = nullptr;
  if (fvs_status st = fvs_graph_read_file(path.c_str(), &raw); st != FVS_OK) return report(st);
  GraphPtr graph(raw);
  fvs_solver_config config = make_config(flags, seed);
  fvs_result* res_raw = nullptr;
  if (fvs_status st = fvs_solve(graph.get(), k, &config, &res_raw); st != FVS_OK) return report(st);
  ResultPtr result(res_raw);

  std::vector<uint32_t> vertices;
  if (fvs_result_found(result.get())) {
    vertices = result_vertices(result.get());
    std::cout << "FVS " << vertices.size() << '\n';
    for (std::size_t i = 0; i < vertices.size(); ++i) std::cout << (i ? " " : "") << vertices[i] + 1;
    std::cout << '\n';
  } else {
    std::cout << "INFEASIBLE\n";
  }
  if (stats) {
    char* text = nullptr;
    if (fvs_status st = fvs_result_stats(result.get(), &text); st != FVS_OK) return report(st);
    std::cout << take_string(text);
  }
  if (!emit_td.empty() && fvs_result_found(result.get())) {
    char* td = nullptr;
    fvs_status st = fvs_tree_decomposition(graph.get(), vertices.data(), vertices.size(), seed, &td);
    if (st != FVS_OK) return report(st);
    std::string text = take_string(td);
    if (emit_td == "-") {
      std::cout << text;
    } else {
      std::ofstream out(emit_td);
      if (!out) {
        std::cerr << "error: cannot write " << emit_td << '\n';
        return kExitUsage;
      }
      out << text;
    }
  }
  return kExitOk;
}

int cmd_gen(const std::string& family, const std::vector<double>& params, uint64_t seed) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      std::cerr << "error: " << family << " takes " << count << " parameter(s)\n";
      return false;
    }
    for (double p : params) {
      if (p < 0) {
        std::cerr << "error: parameters must be non-negative\n";
        return false;
      }
    }
    return true;
  };
  uint64_t a = 0;
  uint64_t b = 0;
  double dbar = 0.0;
  if (family == "cycle") {
    if (!need(1)) return kExitUsage;
    a = static_cast<uint64_t>(params[0]);
  } else if (family == "disjoint-cycles" || family == "random-gnm") {
    if (!need(2)) return kExitUsage;
    a = static_cast<uint64_t>(params[0]);
    b = static_cast<uint64_t>(params[1]);
  } else if (family == "planted-fvs") {
    if (!need(3)) return kExitUsage;
    a = static_cast<uint64_t>(params[0]);
    b = static_cast<uint64_t>(params[1]);
    dbar = params[2];
  }
  fvs_graph* raw = nullptr;
  if (fvs_status st = fvs_generate(family.c_str(), a, b, dbar, seed, &raw); st != FVS_OK) return report(st);
  GraphPtr graph(raw);
  char* text = nullptr;
  if (fvs_status st = fvs_graph_write(graph.get(), &text); st != FVS_OK) return report(st);
  std::cout << take_string(text);
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::vector<uint32_t>& one_indexed) {
  fvs_graph* raw = nullptr;
  if (fvs_status st = fvs_graph_read_file(path.c_str(), &raw); st != FVS_OK) return report(st);
  GraphPtr graph(raw);
  std::vector<uint32_t> ids;
  for (uint32_t v : one_indexed) {
    if (v == 0) {
      std::cerr << "error: vertex ids are 1-indexed\n";
      return kExitUsage;
    }
    ids.push_back(v - 1);
  }
  int ok = 0;
  if (fvs_status st = fvs_verify(graph.get(), ids.data(), ids.size(), &ok); st != FVS_OK) return report(st);
  std::cout << (ok ? "VALID" : "INVALID") << ' ' << ids.size() << '\n';
  return kExitOk;
}

int cmd_oracle(const std::string& path) {
  fvs_graph* raw = nullptr;
  if (fvs_status st = fvs_graph_read_file(path.c_str(), &raw); st != FVS_OK) return report(st);
  GraphPtr graph(raw);
  fvs_result* res_raw = nullptr;
  if (fvs_status st = fvs_oracle_min(graph.get(), &res_raw); st != FVS_OK) return report(st);
  ResultPtr result(res_raw);
  std::vector<uint32_t> vertices = result_vertices(result.get());
  std::cout << "MIN " << vertices.size() << '\n';
  for (std::size_t i = 0; i < vertices.size(); ++i) std::cout << (i ? " " : "") << vertices[i] + 1;
  std::cout << '\n';
  return kExitOk;
}

struct BenchCase {
  std::string name;
  GraphPtr graph;
  uint32_t k = 0;
};

std::vector<BenchCase> bench_suite(const std::string& suite, std::size_t count, uint64_t seed, std::size_t n) {
  std::vector<BenchCase> cases;
  for (std::size_t i = 1; i <= count; ++i) {
    fvs_graph* raw = nullptr;
    uint32_t k = 0;
    std::string name;
    fvs_status st = FVS_OK;
    const uint64_t case_seed = seed + i;
    if (suite == "cycles") {
      st = fvs_generate("disjoint-cycles", i, 3 + (i % 3), 0.0, case_seed, &raw);
      k = static_cast<uint32_t>(i);
      name = "disjoint-cycles-" + std::to_string(i);
    } else if (suite == "random-gnm") {
      st = fvs_generate("random-gnm", n, n + n / 2 + i % 4, 0.0, case_seed, &raw);
      if (st == FVS_OK) {
        fvs_result* min = nullptr;
        st = fvs_oracle_min(raw, &min);
        if (st == FVS_OK) k = static_cast<uint32_t>(fvs_result_size(min));
        fvs_result_free(min);
      }
      name = "random-gnm-" + std::to_string(n) + "-" + std::to_string(i);
    } else if (suite == "planted") {
      k = static_cast<uint32_t>(1 + (i - 1) % 6);
      st = fvs_generate("planted-fvs", 2 * n, k, 3.0, case_seed, &raw);
      name = "planted-" + std::to_string(i);
    } else {
      throw CLI::ValidationError("suite", "unknown suite " + suite);
    }
    if (st != FVS_OK) throw std::runtime_error(fvs_last_error());
    cases.push_back({name, GraphPtr(raw), k});
  }
  return cases;
}

int cmd_bench(const std::string& suite, std::size_t count, std::size_t n, const SolveFlags& flags, uint64_t seed) {
  std::vector<BenchCase> cases;
  try {
    cases = bench_suite(suite, count, seed, n);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  std::cout << "instance,n,m,k,variant,trials-used,wall-time,success\n";
  fvs_solver_config config = make_config(flags, seed);
  for (BenchCase& c : cases) {
    auto start = std::chrono::steady_clock::now();
    fvs_result* raw = nullptr;
    fvs_status st = fvs_solve(c.graph.get(), c.k, &config, &raw);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (st != FVS_OK) return report(st);
    ResultPtr result(raw);
    char* stats = nullptr;
    if (fvs_status s2 = fvs_result_stats(result.get(), &stats); s2 != FVS_OK) return report(s2);
    std::string trials = "0";
    std::istringstream lines(take_string(stats));
    for (std::string line; std::getline(lines, line);) {
      if (line.rfind("trials_used=", 0) == 0) trials = line.substr(12);
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", secs);
    std::cout << c.name << ',' << fvs_graph_vertex_count(c.graph.get()) << ',' << fvs_graph_edge_count(c.graph.get())
              << ',' << c.k << ',' << flags.variant << ',' << trials << ',' << buf << ','
              << (fvs_result_found(result.get()) ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact randomized feedback vertex set solver"};
  app.require_subcommand(1);
  uint64_t seed = 0;
  app.add_option("--seed", seed, "Random seed (falls back to FVSKIT_SEED)")->envname("FVSKIT_SEED");

  SolveFlags flags;
  std::string path;
  uint32_t k = 0;
  bool stats = false;
  std::string emit_td;
  CLI::App* solve = app.add_subcommand("solve", "Search for an FVS of size at most k");
  solve->add_option("instance", path, "Instance file")->required();
  solve->add_option("k", k, "Size bound")->required();
  solve->add_flag("--stats", stats, "Print run statistics as key=value lines");
  solve->add_option("--emit-td", emit_td, "Write a PACE tree decomposition built from the answer ('-' = stdout)");
  add_solver_flags(solve, flags);

  std::string family;
  std::vector<double> params;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("family", family, "cycle | disjoint-cycles | random-gnm | planted-fvs")
      ->required()
      ->check(CLI::IsMember({"cycle", "disjoint-cycles", "random-gnm", "planted-fvs"}));
  gen->add_option("params", params, "Family parameters");

  std::vector<uint32_t> vertices;
  CLI::App* verify = app.add_subcommand("verify", "Check that the given 1-indexed vertices form an FVS");
  verify->add_option("instance", path, "Instance file")->required();
  verify->add_option("vertices", vertices, "Vertex ids");

  CLI::App* oracle = app.add_subcommand("oracle", "Exact minimum FVS by enumeration");
  oracle->add_option("instance", path, "Instance file")->required();

  std::string suite;
  std::size_t count = 6;
  std::size_t bench_n = 14;
  CLI::App* bench = app.add_subcommand("bench", "Run a generated suite and print CSV");
  bench->add_option("suite", suite, "cycles | random-gnm | planted")
      ->required()
      ->check(CLI::IsMember({"cycles", "random-gnm", "planted"}));
  bench->add_option("--count", count, "Number of instances (0 prints the header only)");
  bench->add_option("--n", bench_n, "Vertex count for random-gnm (half the forest size for planted)");
  add_solver_flags(bench, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*solve) return cmd_solve(path, k, flags, seed, stats, emit_td);
  if (*gen) return cmd_gen(family, params, seed);
  if (*verify) return cmd_verify(path, vertices);
  if (*oracle) return cmd_oracle(path);
  if (*bench) return cmd_bench(suite, count, bench_n, flags, seed);
  return kExitUsage;
}
