#include <queue>
#include <stdexcept>
#include <string>

#include "rainbow4/bcolor.hpp"

namespace rainbow4 {

MatchingDecomposition konig_edge_coloring(const Graph& g) {
  if (!bipartite(g)) throw Error(ErrorCode::kNotBipartite, "konig_edge_coloring");
  const int k = g.max_degree();
  std::vector<std::vector<EdgeId>> at(g.num_vertices(),
                                      std::vector<EdgeId>(k + 1, -1));
  std::vector<Color> color(g.num_edges(), kNoColor);
  auto free_at = [&](Vertex x) {
    for (Color c = 1; c <= k; ++c) {
      if (at[x][c] < 0) return c;
    }
    throw std::logic_error("konig: vertex has no free color");
  };

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Vertex u = g.edge(e).u;
    const Vertex v = g.edge(e).v;
    const Color a = free_at(u);
    if (at[v][a] >= 0) {
      // Swap a and b along the a/b path leaving v; bipartiteness keeps it
      // away from u.
      const Color b = free_at(v);
      std::vector<EdgeId> path;
      Vertex x = v;
      for (Color want = a; at[x][want] >= 0; want = want == a ? b : a) {
        EdgeId f = at[x][want];
        path.push_back(f);
        x = g.edge(f).other(x);
      }
      for (EdgeId f : path) {
        at[g.edge(f).u][color[f]] = -1;
        at[g.edge(f).v][color[f]] = -1;
      }
      for (EdgeId f : path) {
        color[f] = color[f] == a ? b : a;
        at[g.edge(f).u][color[f]] = f;
        at[g.edge(f).v][color[f]] = f;
      }
    }
    color[e] = a;
    at[u][a] = e;
    at[v][a] = e;
  }

  MatchingDecomposition md;
  md.matchings.resize(k);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    md.matchings[color[e] - 1].push_back(e);
  }
  return md;
}

EdgeColoring color_bipartite_planar(const Graph& g, BipartiteTrace* trace) {
  if (!bipartite(g)) {
    throw Error(ErrorCode::kNotBipartite, "color_bipartite_planar");
  }
  if (!is_planar(g)) throw Error(ErrorCode::kNotPlanar, "color_bipartite_planar");

  MatchingDecomposition md = konig_edge_coloring(g);
  const int k = static_cast<int>(md.matchings.size());
  std::vector<int> which(g.num_edges()), slot(g.num_edges());
  for (int i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < md.matchings[i].size(); ++j) {
      which[md.matchings[i][j]] = i;
      slot[md.matchings[i][j]] = static_cast<int>(j);
    }
  }
  std::vector<SimpleGraph> fm;
  for (int i = 0; i < k; ++i) {
    fm.emplace_back(static_cast<int>(md.matchings[i].size()));
  }
  for (const FourCycle& cyc : enumerate_c4(g)) {
    for (const auto& [e, f] : cyc.opposite_pairs()) {
      if (which[e] == which[f]) fm[which[e]].add_edge(slot[e], slot[f]);
    }
  }

  EdgeColoring c(g.num_edges());
  for (int i = 0; i < k; ++i) {
    const SimpleGraph& h = fm[i];
    std::vector<int> side(h.size(), -1);
    for (int s = 0; s < h.size(); ++s) {
      if (side[s] >= 0) continue;
      side[s] = 0;
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y = 0; y < h.size(); ++y) {
          if (!h.adjacent(x, y)) continue;
          if (side[y] < 0) {
            side[y] = 1 - side[x];
            q.push(y);
          } else if (side[y] == side[x]) {
            throw Error(ErrorCode::kFMNotBipartite,
                        "F(M_" + std::to_string(i + 1) + ") has an odd cycle");
          }
        }
      }
    }
    for (int j = 0; j < h.size(); ++j) {
      c.assign(md.matchings[i][j], 2 * (i + 1) - 1 + side[j]);
    }
  }
  if (trace) {
    trace->decomposition = std::move(md);
    trace->fm = std::move(fm);
  }
  return c;
}

}  // namespace rainbow4
