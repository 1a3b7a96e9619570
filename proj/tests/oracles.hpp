#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond the Graph type and are only meant for small inputs.

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <vector>

#include "rainbow4/graph.hpp"
#include "rainbow4/lineplus.hpp"

namespace oracle {

using rainbow4::Edge;
using rainbow4::Graph;
using rainbow4::Vertex;

// Every 4-cycle as its canonical vertex tuple, by trying all 4-subsets and
// the three cyclic orders of each.
inline std::set<std::array<Vertex, 4>> c4_tuples(const Graph& g) {
  std::set<std::array<Vertex, 4>> out;
  const int n = g.num_vertices();
  auto canon = [](std::array<Vertex, 4> q) {
    std::array<Vertex, 4> best = q;
    for (int r = 0; r < 4; ++r) {
      std::array<Vertex, 4> fwd{q[r], q[(r + 1) % 4], q[(r + 2) % 4], q[(r + 3) % 4]};
      std::array<Vertex, 4> rev{q[r], q[(r + 3) % 4], q[(r + 2) % 4], q[(r + 1) % 4]};
      best = std::min({best, fwd, rev});
    }
    return best;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          for (auto q : {std::array<Vertex, 4>{a, b, c, d},
                         std::array<Vertex, 4>{a, b, d, c},
                         std::array<Vertex, 4>{a, c, b, d}}) {
            if (g.adjacent(q[0], q[1]) && g.adjacent(q[1], q[2]) &&
                g.adjacent(q[2], q[3]) && g.adjacent(q[3], q[0])) {
              out.insert(canon(q));
            }
          }
        }
  return out;
}

// Routes the pattern edges between fixed branch vertices as internally
// disjoint paths through the remaining vertices.
class Router {
 public:
  Router(const Graph& g, std::vector<Vertex> branch,
         std::vector<std::pair<int, int>> pattern)
      : g_(g), branch_(std::move(branch)), pattern_(std::move(pattern)),
        used_(g.num_vertices(), 0) {
    for (Vertex b : branch_) used_[b] = 1;
  }

  bool run() { return route(0); }

 private:
  bool route(std::size_t i) {
    if (i == pattern_.size()) return true;
    Vertex s = branch_[pattern_[i].first];
    Vertex t = branch_[pattern_[i].second];
    return walk(s, t, i);
  }

  bool walk(Vertex at, Vertex t, std::size_t i) {
    for (Vertex w : g_.neighbors(at)) {
      if (w == t) {
        if (route(i + 1)) return true;
        continue;
      }
      if (used_[w]) continue;
      used_[w] = 1;
      bool ok = walk(w, t, i);
      used_[w] = 0;
      if (ok) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> branch_;
  std::vector<std::pair<int, int>> pattern_;
  std::vector<char> used_;
};

inline void for_subsets(int n, int k, const std::function<bool(std::vector<Vertex>&)>& f) {
  std::vector<Vertex> pick;
  std::function<bool(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == k) return f(pick);
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      if (rec(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  rec(0);
}

// Subdivision of K_k anywhere in g.
inline bool has_complete_subdivision(const Graph& g, int k) {
  std::vector<std::pair<int, int>> pattern;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pattern.emplace_back(i, j);
  bool found = false;
  for_subsets(g.num_vertices(), k, [&](std::vector<Vertex>& b) {
    for (Vertex v : b)
      if (g.degree(v) < k - 1) return false;
    found = Router(g, b, pattern).run();
    return found;
  });
  return found;
}

// Subdivision of K_{a,b} anywhere in g.
inline bool has_bipartite_subdivision(const Graph& g, int a, int b) {
  std::vector<std::pair<int, int>> pattern;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) pattern.emplace_back(i, a + j);
  bool found = false;
  for_subsets(g.num_vertices(), a + b, [&](std::vector<Vertex>& chosen) {
    // Every way of choosing the a-side from the chosen set.
    for_subsets(a + b, a, [&](std::vector<Vertex>& side) {
      std::vector<Vertex> branch;
      std::vector<char> in_a(a + b, 0);
      for (Vertex i : side) in_a[i] = 1;
      for (Vertex i : side) branch.push_back(chosen[i]);
      for (int i = 0; i < a + b; ++i)
        if (!in_a[i]) branch.push_back(chosen[i]);
      for (int i = 0; i < a + b; ++i)
        if (g.degree(branch[i]) < (i < a ? b : a)) return false;
      found = Router(g, branch, pattern).run();
      return found;
    });
    return found;
  });
  return found;
}

inline bool planar(const Graph& g) {
  return !has_complete_subdivision(g, 5) && !has_bipartite_subdivision(g, 3, 3);
}

inline bool outerplanar(const Graph& g) {
  return !has_complete_subdivision(g, 4) && !has_bipartite_subdivision(g, 2, 3);
}

// Chromatic number by trying k = 0, 1, ... with plain backtracking in
// vertex order.
inline int chromatic(const rainbow4::SimpleGraph& h) {
  const int n = h.size();
  std::vector<int> col(n, 0);
  std::function<bool(int, int)> fill = [&](int v, int k) {
    if (v == n) return true;
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (h.adjacent(u, v) && col[u] == c) ok = false;
      if (!ok) continue;
      col[v] = c;
      if (fill(v + 1, k)) return true;
    }
    col[v] = 0;
    return false;
  };
  for (int k = 0;; ++k)
    if (fill(0, k)) return k;
}

// Clique number over all vertex subsets.
inline int clique(const rainbow4::SimpleGraph& h) {
  const int n = h.size();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !h.adjacent(a, b)) ok = false;
    if (ok) best = size;
  }
  return best;
}

}  // namespace oracle
