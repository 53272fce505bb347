#include "fvskit/instance_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "fvskit/error.hpp"

namespace fvs {

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no, std::vector<std::string>* comments) {
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (comments) {
        std::string body = line.substr(first + 1);
        if (!body.empty() && body.front() == ' ') body.erase(0, 1);
        while (!body.empty() && body.back() == '\r') body.pop_back();
        comments->push_back(body);
      }
      continue;
    }
    return true;
  }
  return false;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance inst;
  std::string line;
  std::size_t line_no = 0;
  if (!next_data_line(in, line, line_no, &inst.comments)) throw Error(ErrorCode::kParse, "missing header line \"n m\"");
  long long n = 0;
  long long m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) parse_error(line_no, "expected \"n m\"");
    if (n < 0 || m < 0) parse_error(line_no, "negative count");
  }
  inst.graph = MultiGraph(static_cast<std::size_t>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_data_line(in, line, line_no, &inst.comments)) {
      throw Error(ErrorCode::kParse, "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    }
    std::istringstream row(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) parse_error(line_no, "expected \"u v\"");
    if (u < 1 || u > n || v < 1 || v > n) parse_error(line_no, "vertex id out of range 1.." + std::to_string(n));
    inst.graph.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
  }
  while (next_data_line(in, line, line_no, &inst.comments)) parse_error(line_no, "unexpected data after the edge list");
  return inst;
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const MultiGraph& g, const std::vector<std::string>& comments) {
  for (const std::string& c : comments) out << "# " << c << '\n';
  std::vector<VertexId> vs = g.vertices();
  std::vector<std::size_t> number(g.id_bound(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) number[vs[i]] = i + 1;
  out << vs.size() << ' ' << g.edge_count() << '\n';
  for (VertexId v : vs) {
    for (int l = 0; l < g.loops(v); ++l) out << number[v] << ' ' << number[v] << '\n';
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.id < v) continue;
      for (int x = 0; x < nb.multiplicity; ++x) out << number[v] << ' ' << number[nb.id] << '\n';
    }
  }
}

std::string instance_to_string(const MultiGraph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_instance(out, g, comments);
  return out.str();
}

MultiGraph cycle_graph(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "cycle: length must be positive");
  MultiGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  return g;
}

MultiGraph disjoint_cycles(std::size_t count, std::size_t length) {
  if (length == 0) throw Error(ErrorCode::kInvalidArgument, "disjoint-cycles: length must be positive");
  MultiGraph g(count * length);
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t i = 0; i < length; ++i) {
      g.add_edge(static_cast<VertexId>(c * length + i), static_cast<VertexId>(c * length + (i + 1) % length));
    }
  }
  return g;
}

MultiGraph random_gnm(std::size_t n, std::size_t m, Rng& rng) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (m > pairs) throw Error(ErrorCode::kInvalidArgument, "random-gnm: more edges than vertex pairs");
  MultiGraph g(n);
  std::set<std::pair<VertexId, VertexId>> used;
  std::uniform_int_distribution<VertexId> pick(0, n > 0 ? static_cast<VertexId>(n - 1) : 0);
  while (used.size() < m) {
    VertexId u = pick(rng);
    VertexId v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (used.insert({u, v}).second) g.add_edge(u, v);
  }
  return g;
}

PlantedInstance planted_fvs(std::size_t forest_size, std::size_t k, double dbar, Rng& rng) {
  if (forest_size == 0 && k > 0) throw Error(ErrorCode::kInvalidArgument, "planted-fvs: empty forest");
  if (!(dbar >= 0)) throw Error(ErrorCode::kInvalidArgument, "planted-fvs: degree target must be non-negative");
  const std::size_t per_vertex = std::min<std::size_t>(static_cast<std::size_t>(std::lround(dbar)), forest_size);
  PlantedInstance out{MultiGraph(forest_size + k), {}};
  std::bernoulli_distribution attach(0.75);
  for (std::size_t v = 1; v < forest_size; ++v) {
    if (attach(rng)) {
      std::uniform_int_distribution<VertexId> parent(0, static_cast<VertexId>(v - 1));
      out.graph.add_edge(parent(rng), static_cast<VertexId>(v));
    }
  }
  std::vector<VertexId> forest(forest_size);
  for (std::size_t i = 0; i < forest_size; ++i) forest[i] = static_cast<VertexId>(i);
  for (std::size_t j = 0; j < k; ++j) {
    VertexId x = static_cast<VertexId>(forest_size + j);
    out.planted.insert(x);
    std::vector<VertexId> targets;
    std::sample(forest.begin(), forest.end(), std::back_inserter(targets), per_vertex, rng);
    for (VertexId t : targets) out.graph.add_edge(x, t);
  }
  return out;
}

}  // namespace fvs
