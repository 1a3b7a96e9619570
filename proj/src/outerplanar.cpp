#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "rainbow4/recognition.hpp"

namespace rainbow4 {
namespace {

// Chords for a given Hamiltonian order; nullopt (with a reason) if a cycle
// edge is missing.
std::optional<std::string> chords_for(const Graph& g,
                                      std::span<const Vertex> order,
                                      std::vector<Chord>& chords) {
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(g.num_vertices(), -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<char> on_cycle(g.num_edges(), 0);
  for (int i = 0; i < n; ++i) {
    auto e = g.find_edge(order[i], order[(i + 1) % n]);
    if (!e) {
      return "vertices " + std::to_string(order[i]) + " and " +
             std::to_string(order[(i + 1) % n]) +
             " are consecutive but not adjacent";
    }
    on_cycle[*e] = 1;
  }
  chords.clear();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (on_cycle[e]) continue;
    int i = pos[g.edge(e).u];
    int j = pos[g.edge(e).v];
    if (i > j) std::swap(i, j);
    chords.push_back({e, i, j});
  }
  std::sort(chords.begin(), chords.end(), [](const Chord& a, const Chord& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
  return std::nullopt;
}

std::optional<std::string> check_order(const Graph& g,
                                       std::span<const Vertex> order) {
  const int n = g.num_vertices();
  if (n < 3) return std::string("fewer than three vertices");
  if (static_cast<int>(order.size()) != n) {
    return "order has " + std::to_string(order.size()) + " entries, graph has " +
           std::to_string(n) + " vertices";
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (!g.valid_vertex(v) || seen[v]) {
      return "order is not a permutation (vertex " + std::to_string(v) + ")";
    }
    seen[v] = 1;
  }
  return std::nullopt;
}

std::optional<std::string> check_crossings(const std::vector<Chord>& chords) {
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      const Chord& p = chords[a];
      const Chord& q = chords[b];
      bool cross = (p.i < q.i && q.i < p.j && p.j < q.j) ||
                   (q.i < p.i && p.i < q.j && q.j < p.j);
      if (cross) {
        return "chords " + std::to_string(p.edge) + " and " +
               std::to_string(q.edge) + " cross";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_layout(const Graph& g,
                                           const OuterplanarLayout& layout) {
  if (auto err = check_order(g, layout.order)) return err;
  std::vector<Chord> expected;
  if (auto err = chords_for(g, layout.order, expected)) return err;
  if (expected.size() != layout.chords.size()) {
    return std::string("chord set does not match the graph");
  }
  std::vector<Chord> given = layout.chords;
  std::sort(given.begin(), given.end(), [](const Chord& a, const Chord& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
  for (std::size_t k = 0; k < given.size(); ++k) {
    if (given[k].edge != expected[k].edge || given[k].i != expected[k].i ||
        given[k].j != expected[k].j) {
      return std::string("chord set does not match the graph");
    }
  }
  return check_crossings(expected);
}

OuterplanarLayout outer_cycle(const Graph& g,
                              std::optional<std::span<const Vertex>> declared) {
  OuterplanarLayout layout;
  if (declared) {
    layout.order.assign(declared->begin(), declared->end());
    std::optional<std::string> err = check_order(g, layout.order);
    if (!err) err = chords_for(g, layout.order, layout.chords);
    if (!err) err = check_crossings(layout.chords);
    if (err) throw Error(ErrorCode::kInvalidDeclaredCycle, *err);
    return layout;
  }

  if (!is_two_connected(g)) {
    throw Error(ErrorCode::kNotTwoConnected, "outer cycle needs 2-connectivity");
  }
  if (!is_outerplanar(g)) {
    throw Error(ErrorCode::kNotOuterplanar, "graph is not outerplanar");
  }

  // Peel degree-2 vertices, bridging their neighbours with a (possibly
  // virtual) edge, until a triangle remains; then reinsert in reverse.
  const int n = g.num_vertices();
  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  struct Peel {
    Vertex v, a, b;
  };
  std::vector<Peel> peeled;
  std::vector<char> alive(n, 1);
  int remaining = n;
  while (remaining > 3) {
    Vertex v = -1;
    for (Vertex c = 0; c < n; ++c) {
      if (alive[c] && adj[c].size() == 2) {
        v = c;
        break;
      }
    }
    if (v < 0) throw Error(ErrorCode::kNotOuterplanar, "no degree-2 vertex");
    Vertex a = *adj[v].begin();
    Vertex b = *adj[v].rbegin();
    adj[a].erase(v);
    adj[b].erase(v);
    adj[a].insert(b);
    adj[b].insert(a);
    adj[v].clear();
    alive[v] = 0;
    --remaining;
    peeled.push_back({v, a, b});
  }
  std::vector<Vertex>& order = layout.order;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) order.push_back(v);
  }
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    const int k = static_cast<int>(order.size());
    auto pa = std::find(order.begin(), order.end(), it->a) - order.begin();
    auto pb = std::find(order.begin(), order.end(), it->b) - order.begin();
    if ((pa + 1) % k == pb) {
      order.insert(order.begin() + pa + 1, it->v);
    } else if ((pb + 1) % k == pa) {
      order.insert(order.begin() + pb + 1, it->v);
    } else {
      throw Error(ErrorCode::kNotOuterplanar, "peeling order broke the cycle");
    }
  }

  auto zero = std::find(order.begin(), order.end(), 0);
  std::rotate(order.begin(), zero, order.end());
  if (order[1] > order.back()) std::reverse(order.begin() + 1, order.end());

  std::optional<std::string> err = chords_for(g, order, layout.chords);
  if (!err) err = check_crossings(layout.chords);
  if (err) throw Error(ErrorCode::kNotOuterplanar, *err);
  return layout;
}

}  // namespace rainbow4
