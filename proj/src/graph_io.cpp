#include "rainbow4/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rainbow4 {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void format_error(int line_no, const std::string& msg) {
  throw Error(ErrorCode::kFormat,
              "line " + std::to_string(line_no) + ": " + msg);
}

// Parses "key: value" out of a '#' line; returns false for plain comments.
bool directive(const std::string& line, std::string& key, std::string& value) {
  std::string body = trim(line.substr(1));
  auto colon = body.find(':');
  if (colon == std::string::npos) return false;
  key = trim(body.substr(0, colon));
  value = trim(body.substr(colon + 1));
  return true;
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
  GraphFile file;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  long expected_m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string key, value;
      if (!directive(t, key, value)) continue;
      if (key == "class") {
        file.declared_class = value;
      } else if (key == "outer-cycle") {
        std::istringstream vs(value);
        std::vector<Vertex> order;
        std::string tok;
        while (vs >> tok) {
          try {
            order.push_back(std::stoi(tok));
          } catch (const std::exception&) {
            format_error(line_no, "bad outer-cycle entry '" + tok + "'");
          }
        }
        file.declared_outer_cycle = std::move(order);
      }
      continue;
    }
    std::istringstream ls(t);
    long a = 0, b = 0;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest)) {
      format_error(line_no, "expected two integers");
    }
    if (!have_header) {
      if (a < 0 || b < 0) format_error(line_no, "negative header value");
      n = static_cast<int>(a);
      expected_m = b;
      have_header = true;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      format_error(line_no, "vertex out of range");
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw Error(ErrorCode::kFormat, "missing 'n m' header");
  if (static_cast<long>(edges.size()) != expected_m) {
    throw Error(ErrorCode::kFormat,
                "header declares " + std::to_string(expected_m) +
                    " edges, found " + std::to_string(edges.size()));
  }
  try {
    file.graph = Graph::from_edges(n, edges);
  } catch (const Error& e) {
    throw Error(ErrorCode::kFormat, e.what());
  }
  return file;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFormat, "cannot open '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const GraphFile& file) {
  const Graph& g = file.graph;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  if (file.declared_class) out << "# class: " << *file.declared_class << '\n';
  if (file.declared_outer_cycle) {
    out << "# outer-cycle:";
    for (Vertex v : *file.declared_outer_cycle) out << ' ' << v;
    out << '\n';
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph(std::ostream& out, const Graph& g) {
  write_graph(out, GraphFile{g, std::nullopt, std::nullopt});
}

void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c,
                    const std::string& algorithm) {
  out << "# colors: " << c.palette_size() << '\n';
  out << "# algorithm: " << algorithm << '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << c.color(e) << '\n';
  }
}

EdgeColoring parse_coloring(std::istream& in, const Graph& g) {
  EdgeColoring c(g.num_edges());
  std::vector<char> seen(g.num_edges(), 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    long u = 0, v = 0, color = 0;
    std::string rest;
    if (!(ls >> u >> v >> color) || (ls >> rest)) {
      format_error(line_no, "expected 'u v color'");
    }
    if (color <= 0) format_error(line_no, "colors must be positive");
    std::optional<EdgeId> e;
    if (g.valid_vertex(static_cast<Vertex>(u)) &&
        g.valid_vertex(static_cast<Vertex>(v))) {
      e = g.find_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!e) format_error(line_no, "no such edge in graph");
    if (seen[*e]) format_error(line_no, "edge colored twice");
    seen[*e] = 1;
    c.assign(*e, static_cast<Color>(color));
  }
  return c;
}

EdgeColoring read_coloring_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFormat, "cannot open '" + path + "'");
  return parse_coloring(in, g);
}

}  // namespace rainbow4
