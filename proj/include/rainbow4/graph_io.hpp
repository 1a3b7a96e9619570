#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rainbow4/graph.hpp"

namespace rainbow4 {

// Text format:
//   n m
//   # class: outerplanar|planar|bipartite-planar|subcubic   (optional)
//   # outer-cycle: v0 v1 ... v_{n-1}                         (optional)
//   u v            (m lines, edge ids in order of appearance)
// Any other line starting with '#' is a comment.
struct GraphFile {
  Graph graph;
  std::optional<std::string> declared_class;
  std::optional<std::vector<Vertex>> declared_outer_cycle;
};

GraphFile parse_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const GraphFile& file);
void write_graph(std::ostream& out, const Graph& g);

// Coloring format: "# colors: k", "# algorithm: name", then one
// "u v color" line per edge in edge-id order.
void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c,
                    const std::string& algorithm);

// Lines are matched to edges by endpoints; every edge must appear once.
EdgeColoring parse_coloring(std::istream& in, const Graph& g);
EdgeColoring read_coloring_file(const std::string& path, const Graph& g);

}  // namespace rainbow4
