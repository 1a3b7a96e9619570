#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rainbow4/graph.hpp"

namespace rainbow4 {

// Default vertex cap for the exact oracles (clique, chromatic, q_B).
inline constexpr int kDefaultExactCap = 64;

// kDefaultExactCap, unless RAINBOW4_CAP holds a positive integer.
int exact_cap_from_env();

// Dense simple graph for the exact searches: adjacency rows as bitsets.
class SimpleGraph {
 public:
  using Row = boost::dynamic_bitset<>;

  SimpleGraph() = default;
  explicit SimpleGraph(int n) : rows_(n, Row(n)) {}

  int size() const { return static_cast<int>(rows_.size()); }
  void add_edge(int a, int b);
  bool adjacent(int a, int b) const { return rows_[a].test(b); }
  const Row& row(int v) const { return rows_[v]; }
  int degree(int v) const { return static_cast<int>(rows_[v].count()); }
  int num_edges() const;

 private:
  std::vector<Row> rows_;
};

// Extended line graph: one vertex per source edge (vertex i <-> edge id i).
// L-edges join edges sharing an endpoint; F-edges join independent edges
// that are opposite on some 4-cycle.
struct LinePlusGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> l_edges;
  std::vector<std::pair<int, int>> f_edges;
  std::vector<EdgeId> back_map;

  SimpleGraph line_plus() const;
  SimpleGraph f_only() const;
  SimpleGraph line_only() const;
};

LinePlusGraph build_line_plus(const Graph& g);

struct CliqueResult {
  int size = 0;
  std::vector<int> vertices;
};

// Exact maximum clique (branch and bound, greedy-coloring bound).
// Throws kSizeCapExceeded when h.size() > cap.
CliqueResult clique_number(const SimpleGraph& h, int cap = kDefaultExactCap);

struct ChromaticResult {
  int k = 0;
  std::vector<int> colors;  // 1..k per vertex
};

// Exact chromatic number with a verified witness coloring.
ChromaticResult chromatic_number(const SimpleGraph& h,
                                 std::optional<int> upper_bound_hint = {},
                                 int cap = kDefaultExactCap);

// Clique number of F(g).
int omega_f(const Graph& g, int cap = kDefaultExactCap);
// Clique number of L+(g).
int omega_line_plus(const Graph& g, int cap = kDefaultExactCap);

}  // namespace rainbow4
