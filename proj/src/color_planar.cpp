#include <algorithm>
#include <set>
#include <string>

#include "rainbow4/bcolor.hpp"

namespace rainbow4 {
namespace {

// Picks the neighbour w of v whose edge vw is removed next. Degrees are
// taken inside the subgraph induced by N(v): a degree-0 vertex first, then
// degree 1, then (if every degree is 2) the smallest id, else one of
// degree >= 3. Ties go to the smallest id.
Vertex choose_partner(const std::vector<std::set<Vertex>>& adj, Vertex v) {
  const std::set<Vertex>& w_set = adj[v];
  Vertex best[4] = {-1, -1, -1, -1};  // by degree bucket 0, 1, 2, >=3
  for (Vertex w : w_set) {
    int d = 0;
    for (Vertex x : adj[w]) d += w_set.count(x) ? 1 : 0;
    int bucket = std::min(d, 3);
    if (best[bucket] < 0) best[bucket] = w;
  }
  if (best[0] >= 0) return best[0];
  if (best[1] >= 0) return best[1];
  if (best[3] < 0) return best[2];
  return best[3];
}

}  // namespace

EdgeColoring color_planar(const Graph& g) {
  if (!is_planar(g)) throw Error(ErrorCode::kNotPlanar, "color_planar");

  std::vector<std::set<Vertex>> adj(g.num_vertices());
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<EdgeId> removal;
  removal.reserve(g.num_edges());
  for (int left = g.num_edges(); left > 0; --left) {
    Vertex v = -1;
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      if (!adj[x].empty() && (v < 0 || adj[x].size() < adj[v].size())) v = x;
    }
    Vertex w = choose_partner(adj, v);
    adj[v].erase(w);
    adj[w].erase(v);
    removal.push_back(*g.find_edge(v, w));
  }

  const int bound = 2 * g.max_degree() + 8;
  EdgeColoring c(g.num_edges());
  for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
    std::vector<Color> bad = forbidden_colors(g, c, *it);
    Color pick = 1;
    for (Color x : bad) {
      if (x == pick) ++pick;
    }
    if (pick > bound) {
      throw Error(ErrorCode::kBoundViolated,
                  "edge " + std::to_string(*it) + " sees " +
                      std::to_string(bad.size()) + " forbidden colors");
    }
    c.assign(*it, pick);
  }
  return c;
}

}  // namespace rainbow4
