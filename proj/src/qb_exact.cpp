#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "rainbow4/bcolor.hpp"

namespace rainbow4 {
namespace {

void check_edge_cap(const Graph& g, int cap) {
  if (g.num_edges() > cap) {
    throw Error(ErrorCode::kSizeCapExceeded,
                std::to_string(g.num_edges()) + " edges exceed the exact cap of " +
                    std::to_string(cap));
  }
}

void check_witness(const Graph& g, const EdgeColoring& c, int k,
                   const char* who) {
  VerifyReport r = verify_bcoloring(g, c);
  if (!r.ok() || c.palette_size() != k || c.distinct_colors() != k) {
    throw std::logic_error(std::string(who) + " produced an invalid witness");
  }
}

// Plain backtracking over edges. Conflicts are derived from endpoints and
// adjacency queries alone: two disjoint edges ab, cd lie on a common 4-cycle
// iff a~c and b~d, or a~d and b~c.
class DirectSearch {
 public:
  explicit DirectSearch(const Graph& g) : m_(g.num_edges()), conflict_(m_, 0) {
    for (int e = 0; e < m_; ++e) {
      const Edge& x = g.edge(e);
      for (int f = e + 1; f < m_; ++f) {
        const Edge& y = g.edge(f);
        bool clash = x.shares_endpoint(y) ||
                     (g.adjacent(x.u, y.u) && g.adjacent(x.v, y.v)) ||
                     (g.adjacent(x.u, y.v) && g.adjacent(x.v, y.u));
        if (clash) {
          conflict_[e] |= std::uint32_t{1} << f;
          conflict_[f] |= std::uint32_t{1} << e;
        }
      }
    }
  }

  bool run(int k) {
    k_ = k;
    color_.assign(m_, 0);
    return search(0, 0);
  }
  const std::vector<int>& colors() const { return color_; }

 private:
  std::uint32_t seen_colors(int e) const {
    std::uint32_t mask = 0;
    for (int f = 0; f < m_; ++f) {
      if ((conflict_[e] >> f & 1) && color_[f]) mask |= std::uint32_t{1} << color_[f];
    }
    return mask;
  }

  bool search(int done, int used) {
    if (done == m_) return true;
    int pick = -1;
    int pick_sat = -1;
    std::uint32_t pick_mask = 0;
    for (int e = 0; e < m_; ++e) {
      if (color_[e]) continue;
      std::uint32_t mask = seen_colors(e);
      int sat = std::popcount(mask);
      if (sat > pick_sat ||
          (sat == pick_sat && std::popcount(conflict_[e]) >
                                  std::popcount(conflict_[pick]))) {
        pick = e;
        pick_sat = sat;
        pick_mask = mask;
      }
    }
    const int limit = std::min(k_, used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (pick_mask >> c & 1) continue;
      color_[pick] = c;
      if (search(done + 1, std::max(used, c))) return true;
      color_[pick] = 0;
    }
    return false;
  }

  int m_;
  int k_ = 0;
  std::vector<std::uint32_t> conflict_;
  std::vector<int> color_;
};

}  // namespace

QbResult qb_exact(const Graph& g, int cap) {
  check_edge_cap(g, cap);
  QbResult res{0, EdgeColoring(g.num_edges())};
  if (g.num_edges() == 0) return res;
  LinePlusGraph lp = build_line_plus(g);
  ChromaticResult chi = chromatic_number(lp.line_plus(), std::nullopt, cap);
  res.k = chi.k;
  for (int v = 0; v < lp.num_vertices; ++v) {
    res.coloring.assign(lp.back_map[v], chi.colors[v]);
  }
  check_witness(g, res.coloring, res.k, "qb_exact");
  return res;
}

QbResult qb_exact_direct(const Graph& g, int cap) {
  check_edge_cap(g, std::min(cap, 31));
  QbResult res{0, EdgeColoring(g.num_edges())};
  if (g.num_edges() == 0) return res;
  DirectSearch s(g);
  for (int k = std::max(1, g.max_degree());; ++k) {
    if (s.run(k)) {
      res.k = k;
      for (int e = 0; e < g.num_edges(); ++e) res.coloring.assign(e, s.colors()[e]);
      break;
    }
  }
  check_witness(g, res.coloring, res.k, "qb_exact_direct");
  return res;
}

}  // namespace rainbow4
