#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "rainbow4/recognition.hpp"

namespace rainbow4 {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    boost::add_edge(g.edge(e).u, g.edge(e).v, e, bg);
  }
  return bg;
}

bool planar_edges(const Graph& g, const std::vector<EdgeId>& edges) {
  BoostGraph bg(g.num_vertices());
  for (EdgeId e : edges) boost::add_edge(g.edge(e).u, g.edge(e).v, e, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Drops edges while the rest stays nonplanar. An edge-minimal nonplanar
// graph is a subdivision of K5 or K3,3 plus isolated vertices.
std::vector<EdgeId> minimize_nonplanar(const Graph& g, std::vector<EdgeId> edges) {
  for (std::size_t i = 0; i < edges.size();) {
    std::vector<EdgeId> rest = edges;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (planar_edges(g, rest)) {
      ++i;
    } else {
      edges = std::move(rest);
    }
  }
  return edges;
}

}  // namespace

PlanarityResult planarity(const Graph& g) {
  PlanarityResult res;
  if (g.num_vertices() < 5 || g.num_edges() < 9) return res;
  BoostGraph bg = to_boost(g);
  using Desc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<Desc> kuratowski;
  res.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::kuratowski_subgraph =
          std::back_inserter(kuratowski));
  if (res.planar) return res;

  auto index = boost::get(boost::edge_index, bg);
  KuratowskiWitness w;
  for (const Desc& d : kuratowski) w.edges.push_back(boost::get(index, d));
  std::sort(w.edges.begin(), w.edges.end());
  w.edges.erase(std::unique(w.edges.begin(), w.edges.end()), w.edges.end());
  // The extracted subgraph is occasionally not a clean subdivision; shrink
  // it (or the whole graph) to a minimal nonplanar edge set instead.
  auto kind = check_kuratowski(g, w.edges);
  if (!kind) {
    std::vector<EdgeId> start = w.edges;
    if (planar_edges(g, start)) {
      start.resize(g.num_edges());
      for (EdgeId e = 0; e < g.num_edges(); ++e) start[e] = e;
    }
    w.edges = minimize_nonplanar(g, std::move(start));
    kind = check_kuratowski(g, w.edges);
  }
  if (!kind) throw std::logic_error("no Kuratowski subgraph in a nonplanar graph");
  w.kind = *kind;
  res.witness = std::move(w);
  return res;
}

std::optional<KuratowskiKind> check_kuratowski(const Graph& g,
                                               std::span<const EdgeId> edges) {
  std::vector<EdgeId> es(edges.begin(), edges.end());
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return std::nullopt;
  for (EdgeId e : es) {
    if (!g.valid_edge(e)) return std::nullopt;
  }

  std::map<Vertex, std::vector<EdgeId>> inc;
  for (EdgeId e : es) {
    inc[g.edge(e).u].push_back(e);
    inc[g.edge(e).v].push_back(e);
  }
  std::vector<Vertex> branch;
  for (const auto& [v, list] : inc) {
    if (list.size() > 2) {
      branch.push_back(v);
    } else if (list.size() != 2) {
      return std::nullopt;
    }
  }
  int target_degree = 0;
  if (branch.size() == 5) {
    target_degree = 4;
  } else if (branch.size() == 6) {
    target_degree = 3;
  } else {
    return std::nullopt;
  }
  std::map<Vertex, int> slot;
  for (int i = 0; i < static_cast<int>(branch.size()); ++i) {
    if (static_cast<int>(inc[branch[i]].size()) != target_degree) {
      return std::nullopt;
    }
    slot[branch[i]] = i;
  }

  // Trace each path between branch vertices; every subdivision vertex must
  // be consumed by exactly one path.
  const int b = static_cast<int>(branch.size());
  std::vector<std::vector<int>> mult(b, std::vector<int>(b, 0));
  std::map<EdgeId, int> used;
  std::size_t visited_edges = 0;
  for (Vertex s : branch) {
    for (EdgeId first : inc[s]) {
      if (used.count(first)) continue;
      Vertex cur = s;
      EdgeId e = first;
      while (true) {
        used[e] = 1;
        ++visited_edges;
        Vertex nxt = g.edge(e).other(cur);
        if (slot.count(nxt)) {
          if (nxt == s) return std::nullopt;
          ++mult[slot[s]][slot[nxt]];
          ++mult[slot[nxt]][slot[s]];
          break;
        }
        const auto& two = inc[nxt];
        EdgeId onward = two[0] == e ? two[1] : two[0];
        if (used.count(onward)) return std::nullopt;
        cur = nxt;
        e = onward;
      }
    }
  }
  if (visited_edges != es.size()) return std::nullopt;

  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      if (mult[i][j] > 1) return std::nullopt;
    }
  }
  if (b == 5) return KuratowskiKind::kK5;  // 4-regular simple on 5 = K5

  // 3-regular simple on 6 vertices: K3,3 iff it is bipartite.
  std::vector<int> side(6, -1);
  side[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < 6; ++w) {
      if (!mult[v][w]) continue;
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return std::nullopt;
      }
    }
  }
  if (std::count(side.begin(), side.end(), -1) != 0) return std::nullopt;
  return KuratowskiKind::kK33;
}

bool is_outerplanar(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 3) return true;
  if (g.num_edges() > 2 * n - 3) return false;
  Graph apex(n + 1);
  for (const Edge& e : g.edges()) apex.add_edge(e.u, e.v);
  for (Vertex v = 0; v < n; ++v) apex.add_edge(v, n);
  return is_planar(apex);
}

}  // namespace rainbow4
