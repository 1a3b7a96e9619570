#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "rainbow4/generators.hpp"
#include "rainbow4/graph.hpp"

namespace testing {

inline rainbow4::Graph make(int n,
                            std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> es(edges);
  return rainbow4::Graph::from_edges(n, es);
}

inline rainbow4::Graph named(const std::string& family,
                             std::vector<int> params = {}) {
  return rainbow4::gen_named({family, std::move(params), std::nullopt});
}

// G(n, p) with a fixed seed.
inline rainbow4::Graph gnp(int n, double p, std::uint64_t seed) {
  rainbow4::Rng rng(seed);
  rainbow4::Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.chance(p)) g.add_edge(a, b);
  return g;
}

// Every labeled graph on n vertices (n <= 6).
template <class F>
void all_graphs(int n, F&& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    rainbow4::Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    f(g);
  }
}

}  // namespace testing
