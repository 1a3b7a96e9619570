#include "rainbow4/lineplus.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace rainbow4 {

int exact_cap_from_env() {
  if (const char* env = std::getenv("RAINBOW4_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1'000'000) {
      return static_cast<int>(v);
    }
  }
  return kDefaultExactCap;
}

void SimpleGraph::add_edge(int a, int b) {
  if (a == b) return;
  rows_[a].set(b);
  rows_[b].set(a);
}

int SimpleGraph::num_edges() const {
  int twice = 0;
  for (const Row& r : rows_) twice += static_cast<int>(r.count());
  return twice / 2;
}

namespace {

SimpleGraph from_pairs(int n,
                       const std::vector<std::pair<int, int>>& a,
                       const std::vector<std::pair<int, int>>& b) {
  SimpleGraph h(n);
  for (const auto& [x, y] : a) h.add_edge(x, y);
  for (const auto& [x, y] : b) h.add_edge(x, y);
  return h;
}

}  // namespace

SimpleGraph LinePlusGraph::line_plus() const {
  return from_pairs(num_vertices, l_edges, f_edges);
}
SimpleGraph LinePlusGraph::f_only() const {
  return from_pairs(num_vertices, {}, f_edges);
}
SimpleGraph LinePlusGraph::line_only() const {
  return from_pairs(num_vertices, l_edges, {});
}

LinePlusGraph build_line_plus(const Graph& g) {
  LinePlusGraph lp;
  lp.num_vertices = g.num_edges();
  lp.back_map.resize(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) lp.back_map[e] = e;

  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        lp.l_edges.emplace_back(std::min(inc[i], inc[j]),
                                std::max(inc[i], inc[j]));
      }
    }
  }
  std::sort(lp.l_edges.begin(), lp.l_edges.end());

  std::set<std::pair<int, int>> f;
  for (const FourCycle& c : enumerate_c4(g)) {
    for (const auto& [a, b] : c.opposite_pairs()) {
      f.emplace(std::min(a, b), std::max(a, b));
    }
  }
  lp.f_edges.assign(f.begin(), f.end());
  return lp;
}

int omega_f(const Graph& g, int cap) {
  return clique_number(build_line_plus(g).f_only(), cap).size;
}

int omega_line_plus(const Graph& g, int cap) {
  return clique_number(build_line_plus(g).line_plus(), cap).size;
}

}  // namespace rainbow4
