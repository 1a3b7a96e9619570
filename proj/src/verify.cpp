#include <algorithm>
#include <string>

#include "rainbow4/bcolor.hpp"

namespace rainbow4 {

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kAdjacentSameColor: return "adjacent-same-color";
    case ViolationKind::kRepeatedColorOnC4: return "repeated-color-on-C4";
  }
  return "unknown";
}

VerifyReport verify_bcoloring(const Graph& g, const EdgeColoring& c) {
  if (c.num_edges() != g.num_edges() || !c.is_total()) {
    throw Error(ErrorCode::kPartialColoring,
                "coloring does not assign every edge");
  }
  VerifyReport r;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (c.color(inc[i]) == c.color(inc[j])) {
          r.proper = false;
          r.violations.push_back({ViolationKind::kAdjacentSameColor,
                                  {std::min(inc[i], inc[j]),
                                   std::max(inc[i], inc[j])},
                                  std::nullopt});
        }
      }
    }
  }
  for (const FourCycle& cyc : enumerate_c4(g)) {
    std::array<Color, 4> cs;
    for (int i = 0; i < 4; ++i) cs[i] = c.color(cyc.edges[i]);
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) {
      r.rainbow = false;
      r.violations.push_back({ViolationKind::kRepeatedColorOnC4,
                              {cyc.edges.begin(), cyc.edges.end()},
                              cyc});
    }
  }
  r.colors_used = c.palette_size();
  return r;
}

std::vector<EdgeId> lplus_neighbors(const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  std::vector<EdgeId> out;
  for (Vertex x : {ed.u, ed.v}) {
    for (EdgeId f : g.incident(x)) {
      if (f != e) out.push_back(f);
    }
  }
  for (const FourCycle& cyc : c4_through_edge(g, e)) {
    for (EdgeId f : cyc.edges) {
      if (f != e) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Color> forbidden_colors(const Graph& g, const EdgeColoring& partial,
                                    EdgeId e) {
  std::vector<Color> out;
  for (EdgeId f : lplus_neighbors(g, e)) {
    if (partial.assigned(f)) out.push_back(partial.color(f));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> theoretical_bound(const Graph& g, GraphClass c) {
  const int d = g.max_degree();
  switch (c) {
    case GraphClass::kPlanar: return 2 * d + 8;
    case GraphClass::kBipartitePlanar: return 2 * d;
    case GraphClass::kSubcubicPlanar: return 6;
    case GraphClass::kOuterplanar: {
      int bound = d + 1;
      for (const Block& b : blocks(g)) {
        const Graph& h = b.sub.graph;
        if (h.num_vertices() == 4 && h.num_edges() == 4) bound = std::max(bound, 4);
        if (h.num_vertices() == 4 && h.num_edges() == 5) bound = std::max(bound, 5);
      }
      return bound;
    }
    case GraphClass::kNonplanar: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace rainbow4
