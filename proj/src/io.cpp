#include "modnet/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "modnet/errors.hpp"

namespace modnet {
namespace {

// Strips comments and splits a line into whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::map<std::string, int> ids;
  std::vector<std::string> labels;
  std::vector<WeightedEdge> edges;

  auto intern = [&](const std::string& tok) {
    auto [it, inserted] = ids.try_emplace(tok, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(tok);
    return it->second;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw DataError("edge list line " + std::to_string(line_no) +
                      ": expected 'u v' or 'u v w'");
    }
    WeightedEdge e;
    e.u = intern(tokens[0]);
    e.v = intern(tokens[1]);
    e.w = tokens.size() == 3 ? parse_rational(tokens[2]) : Rational(1);
    edges.push_back(std::move(e));
  }
  const int n = static_cast<int>(labels.size());
  return Graph(n, std::move(edges), std::move(labels));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto name = [&](int v) {
    return g.labels().empty() ? std::to_string(v) : g.labels()[v];
  };
  for (const auto& e : g.edges()) {
    out << name(e.u) << ' ' << name(e.v);
    if (e.w != 1) out << ' ' << to_string(e.w);
    out << '\n';
  }
  // Isolated vertices have no edge line; keep their labels visible.
  std::vector<bool> seen(g.vertex_count(), false);
  for (const auto& e : g.edges()) seen[e.u] = seen[e.v] = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) out << "# isolated " << name(v) << '\n';
  }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write edge list file: " + path);
  write_edge_list(out, g);
}

Partition read_partition(std::istream& in, const Graph& g) {
  std::map<std::string, int> vertex_ids;
  for (int v = 0; v < g.vertex_count(); ++v) {
    vertex_ids[g.labels().empty() ? std::to_string(v) : g.labels()[v]] = v;
  }

  std::vector<int> assignment(g.vertex_count(), -1);
  std::map<std::string, int> part_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw DataError("partition line " + std::to_string(line_no) +
                      ": expected 'vertex part'");
    }
    auto it = vertex_ids.find(tokens[0]);
    if (it == vertex_ids.end()) {
      throw DataError("partition references unknown vertex '" + tokens[0] +
                      "'");
    }
    const int part =
        part_ids.try_emplace(tokens[1], static_cast<int>(part_ids.size()))
            .first->second;
    assignment[it->second] = part;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (assignment[v] == -1) {
      throw DataError("partition leaves vertex " + std::to_string(v) +
                      " unassigned");
    }
  }
  return Partition(std::move(assignment));
}

Partition read_partition_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open partition file: " + path);
  return read_partition(in, g);
}

void write_partition(std::ostream& out, const Graph& g, const Partition& p) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::string name =
        g.labels().empty() ? std::to_string(v) : g.labels()[v];
    out << name << ' ' << p.part_of(v) << '\n';
  }
}

Graph read_dolphin_file(const std::string& path) {
  Graph g = read_edge_list_file(path);
  if (g.vertex_count() != 62 || g.edge_count() != 159) {
    throw DataError("dolphin network should have 62 vertices and 159 edges, "
                    "got " + std::to_string(g.vertex_count()) + " vertices / " +
                    std::to_string(g.edge_count()) + " edges: " + path);
  }
  return g;
}

}  // namespace modnet
