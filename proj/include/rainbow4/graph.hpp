#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "rainbow4/error.hpp"

namespace rainbow4 {

using Vertex = int;
using EdgeId = int;
using Color = int;  // 1-based; 0 means "unassigned"

inline constexpr Color kNoColor = 0;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool touches(Vertex w) const { return w == u || w == v; }
  bool shares_endpoint(const Edge& e) const {
    return touches(e.u) || touches(e.v);
  }
};

// Simple undirected graph on vertices 0..n-1. Edge ids are assigned in
// insertion order and never change; every derived graph keeps a map back to
// the ids of its parent.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  // Throws kInvalidGraph on self-loops, parallel edges or out-of-range ends.
  static Graph from_edges(int num_vertices,
                          std::span<const std::pair<Vertex, Vertex>> edges);

  EdgeId add_edge(Vertex u, Vertex v);

  int num_vertices() const { return static_cast<int>(incident_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const { return incident_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }
  int max_degree() const;

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }
  std::vector<Vertex> neighbors(Vertex v) const;

  bool valid_vertex(Vertex v) const { return v >= 0 && v < num_vertices(); }
  bool valid_edge(EdgeId e) const { return e >= 0 && e < num_edges(); }

 private:
  static std::uint64_t key(Vertex u, Vertex v);

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

// A graph derived from a parent by deletion or restriction, with maps from
// local ids back to parent ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> vertex_to_parent;
  std::vector<EdgeId> edge_to_parent;
};

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> doomed);
Subgraph remove_edges(const Graph& g, std::span<const EdgeId> doomed);
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> keep);

// Vertex-disjoint union, second graph's vertices shifted by g.num_vertices().
Graph disjoint_union(const Graph& g, const Graph& h);

// A 4-cycle (a,b,c,d) in canonical form: a is the smallest vertex and b < d.
// edges[i] joins vertices[i] and vertices[(i+1)%4]; opposite pairs are
// (edges[0], edges[2]) and (edges[1], edges[3]).
struct FourCycle {
  std::array<Vertex, 4> vertices;
  std::array<EdgeId, 4> edges;

  std::array<std::pair<EdgeId, EdgeId>, 2> opposite_pairs() const {
    return {{{edges[0], edges[2]}, {edges[1], edges[3]}}};
  }
  bool contains(EdgeId e) const {
    return edges[0] == e || edges[1] == e || edges[2] == e || edges[3] == e;
  }
  auto operator<=>(const FourCycle& o) const { return vertices <=> o.vertices; }
  bool operator==(const FourCycle& o) const { return vertices == o.vertices; }
};

// Builds the canonical FourCycle for the closed walk a-b-c-d-a. All four
// consecutive pairs must be edges of g.
FourCycle make_four_cycle(const Graph& g, Vertex a, Vertex b, Vertex c,
                          Vertex d);

std::vector<FourCycle> enumerate_c4(const Graph& g);
std::vector<FourCycle> c4_through_edge(const Graph& g, EdgeId e);

class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(int num_edges) : colors_(num_edges, kNoColor) {}

  int num_edges() const { return static_cast<int>(colors_.size()); }
  Color color(EdgeId e) const { return colors_.at(e); }
  bool assigned(EdgeId e) const { return colors_.at(e) != kNoColor; }
  void assign(EdgeId e, Color c);
  void clear(EdgeId e) { colors_.at(e) = kNoColor; }

  bool is_total() const;
  // Largest color in use.
  Color palette_size() const;
  int distinct_colors() const;

  // Relabels the colors in use to 1..k, preserving their relative order.
  EdgeColoring normalized() const;

  const std::vector<Color>& raw() const { return colors_; }
  bool operator==(const EdgeColoring&) const = default;

 private:
  std::vector<Color> colors_;
};

struct Block {
  Subgraph sub;
  bool is_bridge() const { return sub.graph.num_edges() == 1; }
};

// Biconnected components. Every edge lands in exactly one block; blocks are
// ordered by their smallest parent edge id.
std::vector<Block> blocks(const Graph& g);

std::vector<Vertex> cut_vertices(const Graph& g);
bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);
// Component index per vertex, numbered in order of smallest member.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

struct Bipartition {
  std::vector<int> side;  // 0 or 1 per vertex
};
struct OddCycle {
  std::vector<Vertex> walk;  // closed walk, first vertex not repeated
};
using BipartiteResult = std::variant<Bipartition, OddCycle>;

BipartiteResult is_bipartite(const Graph& g);
inline bool bipartite(const Graph& g) {
  return std::holds_alternative<Bipartition>(is_bipartite(g));
}

}  // namespace rainbow4
