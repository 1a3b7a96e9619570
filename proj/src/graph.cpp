#include "rainbow4/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace rainbow4 {

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) {
    throw Error(ErrorCode::kInvalidGraph, "negative vertex count");
  }
  incident_.resize(num_vertices);
}

Graph Graph::from_edges(int num_vertices,
                        std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(num_vertices);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::uint64_t Graph::key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
  if (!valid_vertex(u) || !valid_vertex(v)) {
    throw Error(ErrorCode::kInvalidGraph,
                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") out of range");
  }
  if (u == v) {
    throw Error(ErrorCode::kInvalidGraph,
                "self-loop at vertex " + std::to_string(u));
  }
  auto [it, inserted] = index_.emplace(key(u, v), num_edges());
  if (!inserted) {
    throw Error(ErrorCode::kInvalidGraph,
                "parallel edge (" + std::to_string(u) + "," +
                    std::to_string(v) + ")");
  }
  EdgeId id = num_edges();
  edges_.push_back({u, v});
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  return id;
}

const Edge& Graph::edge(EdgeId e) const {
  if (!valid_edge(e)) {
    throw Error(ErrorCode::kUnknownEdge, "edge id " + std::to_string(e));
  }
  return edges_[e];
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& inc : incident_) {
    best = std::max(best, static_cast<int>(inc.size()));
  }
  return best;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u == v) return std::nullopt;
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(incident_[v].size());
  for (EdgeId e : incident_[v]) out.push_back(edges_[e].other(v));
  return out;
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> keep) {
  std::vector<Vertex> local(g.num_vertices(), -1);
  Subgraph sub;
  for (EdgeId e : keep) {
    for (Vertex w : {g.edge(e).u, g.edge(e).v}) {
      if (local[w] < 0) {
        local[w] = static_cast<Vertex>(sub.vertex_to_parent.size());
        sub.vertex_to_parent.push_back(w);
      }
    }
  }
  sub.graph = Graph(static_cast<int>(sub.vertex_to_parent.size()));
  for (EdgeId e : keep) {
    sub.graph.add_edge(local[g.edge(e).u], local[g.edge(e).v]);
    sub.edge_to_parent.push_back(e);
  }
  return sub;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> local(g.num_vertices(), -1);
  Subgraph sub;
  for (Vertex v : keep) {
    if (!g.valid_vertex(v) || local[v] >= 0) continue;
    local[v] = static_cast<Vertex>(sub.vertex_to_parent.size());
    sub.vertex_to_parent.push_back(v);
  }
  sub.graph = Graph(static_cast<int>(sub.vertex_to_parent.size()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (local[ed.u] >= 0 && local[ed.v] >= 0) {
      sub.graph.add_edge(local[ed.u], local[ed.v]);
      sub.edge_to_parent.push_back(e);
    }
  }
  return sub;
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> doomed) {
  std::vector<char> gone(g.num_vertices(), 0);
  for (Vertex v : doomed) {
    if (g.valid_vertex(v)) gone[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Subgraph remove_edges(const Graph& g, std::span<const EdgeId> doomed) {
  std::vector<char> gone(g.num_edges(), 0);
  for (EdgeId e : doomed) {
    if (g.valid_edge(e)) gone[e] = 1;
  }
  Subgraph sub;
  sub.graph = Graph(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) sub.vertex_to_parent.push_back(v);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (gone[e]) continue;
    sub.graph.add_edge(g.edge(e).u, g.edge(e).v);
    sub.edge_to_parent.push_back(e);
  }
  return sub;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.num_vertices() + h.num_vertices());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  const int shift = g.num_vertices();
  for (const Edge& e : h.edges()) out.add_edge(e.u + shift, e.v + shift);
  return out;
}

FourCycle make_four_cycle(const Graph& g, Vertex a, Vertex b, Vertex c,
                          Vertex d) {
  std::array<Vertex, 4> walk{a, b, c, d};
  int start = static_cast<int>(std::min_element(walk.begin(), walk.end()) -
                               walk.begin());
  Vertex next = walk[(start + 1) % 4];
  Vertex prev = walk[(start + 3) % 4];
  FourCycle cyc{};
  for (int i = 0; i < 4; ++i) {
    cyc.vertices[i] =
        next < prev ? walk[(start + i) % 4] : walk[(start + 4 - i) % 4];
  }
  for (int i = 0; i < 4; ++i) {
    auto e = g.find_edge(cyc.vertices[i], cyc.vertices[(i + 1) % 4]);
    if (!e) {
      throw Error(ErrorCode::kInvalidGraph, "closed walk is not a 4-cycle");
    }
    cyc.edges[i] = *e;
  }
  return cyc;
}

std::vector<FourCycle> enumerate_c4(const Graph& g) {
  // Every 4-cycle is generated once: from its smallest vertex u and the
  // opposite vertex w, via the pair of common neighbours between them.
  std::vector<FourCycle> out;
  std::vector<std::vector<Vertex>> common(g.num_vertices());
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    touched.clear();
    for (EdgeId e1 : g.incident(u)) {
      Vertex x = g.edge(e1).other(u);
      if (x < u) continue;
      for (EdgeId e2 : g.incident(x)) {
        Vertex w = g.edge(e2).other(x);
        if (w <= u) continue;
        if (common[w].empty()) touched.push_back(w);
        common[w].push_back(x);
      }
    }
    for (Vertex w : touched) {
      auto& mids = common[w];
      std::sort(mids.begin(), mids.end());
      for (std::size_t i = 0; i < mids.size(); ++i) {
        for (std::size_t j = i + 1; j < mids.size(); ++j) {
          out.push_back(make_four_cycle(g, u, mids[i], w, mids[j]));
        }
      }
      mids.clear();
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FourCycle> c4_through_edge(const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  std::vector<FourCycle> out;
  for (EdgeId fb : g.incident(ed.v)) {
    Vertex x = g.edge(fb).other(ed.v);
    if (x == ed.u) continue;
    for (EdgeId fa : g.incident(ed.u)) {
      Vertex y = g.edge(fa).other(ed.u);
      if (y == ed.v || y == x) continue;
      if (g.adjacent(x, y)) out.push_back(make_four_cycle(g, ed.u, ed.v, x, y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void EdgeColoring::assign(EdgeId e, Color c) {
  if (c < 0) throw Error(ErrorCode::kInvalidParams, "negative color");
  colors_.at(e) = c;
}

bool EdgeColoring::is_total() const {
  return std::none_of(colors_.begin(), colors_.end(),
                      [](Color c) { return c == kNoColor; });
}

Color EdgeColoring::palette_size() const {
  Color best = 0;
  for (Color c : colors_) best = std::max(best, c);
  return best;
}

int EdgeColoring::distinct_colors() const {
  std::set<Color> seen;
  for (Color c : colors_) {
    if (c != kNoColor) seen.insert(c);
  }
  return static_cast<int>(seen.size());
}

EdgeColoring EdgeColoring::normalized() const {
  std::vector<Color> used;
  for (Color c : colors_) {
    if (c != kNoColor) used.push_back(c);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  EdgeColoring out(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (colors_[e] == kNoColor) continue;
    auto it = std::lower_bound(used.begin(), used.end(), colors_[e]);
    out.colors_[e] = static_cast<Color>(it - used.begin()) + 1;
  }
  return out;
}

namespace {

struct DfsResult {
  std::vector<std::vector<EdgeId>> components;
  std::vector<char> is_cut;
};

// Iterative Hopcroft-Tarjan over the edge stack.
DfsResult biconnected(const Graph& g) {
  const int n = g.num_vertices();
  DfsResult res;
  res.is_cut.assign(n, 0);
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  int clock = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0 || g.degree(root) == 0) continue;
    disc[root] = low[root] = clock++;
    int root_children = 0;
    std::vector<Frame> frames{{root, -1, 0}};
    while (!frames.empty()) {
      Frame& f = frames.back();
      Vertex v = f.v;
      if (f.next < g.incident(v).size()) {
        EdgeId e = g.incident(v)[f.next++];
        if (e == f.via) continue;
        Vertex w = g.edge(e).other(v);
        if (disc[w] < 0) {
          edge_stack.push_back(e);
          disc[w] = low[w] = clock++;
          if (v == root) ++root_children;
          frames.push_back({w, e, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      EdgeId via = f.via;
      frames.pop_back();
      if (frames.empty()) break;
      Vertex p = frames.back().v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        if (p != root) res.is_cut[p] = 1;
        std::vector<EdgeId> comp;
        while (true) {
          EdgeId top = edge_stack.back();
          edge_stack.pop_back();
          comp.push_back(top);
          if (top == via) break;
        }
        res.components.push_back(std::move(comp));
      }
    }
    if (root_children >= 2) res.is_cut[root] = 1;
  }
  return res;
}

}  // namespace

std::vector<Block> blocks(const Graph& g) {
  DfsResult dfs = biconnected(g);
  for (auto& comp : dfs.components) std::sort(comp.begin(), comp.end());
  std::sort(dfs.components.begin(), dfs.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<Block> out;
  out.reserve(dfs.components.size());
  for (const auto& comp : dfs.components) {
    out.push_back(Block{edge_subgraph(g, comp)});
  }
  return out;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  DfsResult dfs = biconnected(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (dfs.is_cut[v]) out.push_back(v);
  }
  return out;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> comp(g.num_vertices(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        Vertex w = g.edge(e).other(v);
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

bool is_two_connected(const Graph& g) {
  if (g.num_vertices() < 3 || !is_connected(g)) return false;
  return cut_vertices(g).empty();
}

BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  std::vector<Vertex> parent(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (EdgeId e : g.incident(v)) {
        Vertex w = g.edge(e).other(v);
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          parent[w] = v;
          q.push(w);
        } else if (side[w] == side[v]) {
          // Both tree paths to the common ancestor plus the edge (v,w) close
          // an odd cycle.
          std::vector<Vertex> pv{v}, pw{w};
          std::vector<char> on_pv(n, 0);
          on_pv[v] = 1;
          for (Vertex x = v; parent[x] >= 0;) {
            x = parent[x];
            pv.push_back(x);
            on_pv[x] = 1;
          }
          Vertex meet = w;
          while (!on_pv[meet]) {
            meet = parent[meet];
            pw.push_back(meet);
          }
          OddCycle odd;
          for (Vertex x : pv) {
            odd.walk.push_back(x);
            if (x == meet) break;
          }
          // pw ends at meet; append it reversed without meet.
          for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) {
            odd.walk.push_back(*it);
          }
          return odd;
        }
      }
    }
  }
  return Bipartition{std::move(side)};
}

}  // namespace rainbow4
