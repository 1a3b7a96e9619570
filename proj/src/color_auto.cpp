#include <algorithm>
#include <chrono>
#include <queue>
#include <set>
#include <string>

#include "rainbow4/bcolor.hpp"

namespace rainbow4 {
namespace {

struct BlockColoring {
  EdgeColoring coloring;
  std::string algorithm;
};

BlockColoring color_block(const Graph& b, int cap, BoundReport& report) {
  if (b.num_edges() == 1) {
    EdgeColoring c(1);
    c.assign(0, 1);
    return {c, "bridge"};
  }
  ClassLabel label = classify(b);
  try {
    switch (label.label) {
      case GraphClass::kOuterplanar:
        return {color_outerplanar(b, *label.layout), "outerplanar"};
      case GraphClass::kSubcubicPlanar:
        return {color_subcubic(b), "subcubic"};
      case GraphClass::kBipartitePlanar:
        return {color_bipartite_planar(b), "bipartite"};
      case GraphClass::kPlanar:
        return {color_planar(b), "planar"};
      case GraphClass::kNonplanar:
        if (b.num_edges() > cap) {
          throw Error(ErrorCode::kUnsupported,
                      "nonplanar block with " + std::to_string(b.num_edges()) +
                          " edges exceeds the exact cap");
        }
        return {qb_exact(b, cap).coloring, "exact"};
    }
  } catch (const Error& err) {
    bool recoverable = err.code() == ErrorCode::kCaseExhaustion ||
                       err.code() == ErrorCode::kBoundViolated;
    if (!recoverable || b.num_edges() > cap) throw;
    report.fallback = true;
    report.events.push_back(err.what());
    return {qb_exact(b, cap).coloring, "exact"};
  }
  throw Error(ErrorCode::kUnsupported, "unknown class");
}

// Bijection on 1..k sending the colors in `keep_clear` away from `used`;
// every other color stays put when it can.
std::vector<Color> palette_shift(int k, const std::set<Color>& keep_clear,
                                 const std::set<Color>& used) {
  std::vector<Color> map(k + 1, kNoColor);
  std::vector<char> taken(k + 1, 0);
  auto claim = [&](Color from, bool avoid_used) {
    Color to = from;
    if (taken[to] || (avoid_used && used.count(to))) {
      to = 1;
      while (taken[to] || (avoid_used && used.count(to))) ++to;
    }
    map[from] = to;
    taken[to] = 1;
  };
  for (Color x : keep_clear) claim(x, true);
  for (Color x = 1; x <= k; ++x) {
    if (!map[x]) claim(x, false);
  }
  return map;
}

}  // namespace

AutoResult color_auto(const Graph& g, int cap) {
  const auto start = std::chrono::steady_clock::now();
  AutoResult out;
  BoundReport& r = out.report;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.max_degree = g.max_degree();
  r.label = classify(g).label;
  r.bound = theoretical_bound(g, r.label);

  std::vector<Block> bs = blocks(g);
  std::vector<EdgeColoring> local;
  std::set<std::string> algos;
  int k = g.max_degree();
  for (const Block& b : bs) {
    BlockColoring bc = color_block(b.sub.graph, cap, r);
    algos.insert(bc.algorithm);
    k = std::max(k, bc.coloring.palette_size());
    local.push_back(std::move(bc.coloring));
  }

  // Walk the block-cut tree; each block is relabeled so that its colors at
  // the cut vertex it hangs from avoid the colors already there.
  std::vector<std::vector<int>> blocks_at(g.num_vertices());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (Vertex v : bs[i].sub.vertex_to_parent) blocks_at[v].push_back(static_cast<int>(i));
  }
  std::vector<std::set<Color>> used(g.num_vertices());
  std::vector<char> seen(bs.size(), 0);
  EdgeColoring c(g.num_edges());
  for (std::size_t root = 0; root < bs.size(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::queue<std::pair<int, Vertex>> q;  // block, attaching vertex
    q.push({static_cast<int>(root), -1});
    while (!q.empty()) {
      auto [bi, via] = q.front();
      q.pop();
      const Subgraph& sub = bs[bi].sub;
      std::set<Color> at_via;
      std::vector<Color> map(k + 1);
      for (Color x = 0; x <= k; ++x) map[x] = x;
      if (via >= 0) {
        for (EdgeId e = 0; e < sub.graph.num_edges(); ++e) {
          const Edge& ed = sub.graph.edge(e);
          if (sub.vertex_to_parent[ed.u] == via || sub.vertex_to_parent[ed.v] == via) {
            at_via.insert(local[bi].color(e));
          }
        }
        map = palette_shift(k, at_via, used[via]);
      }
      for (EdgeId e = 0; e < sub.graph.num_edges(); ++e) {
        Color x = map[local[bi].color(e)];
        EdgeId pe = sub.edge_to_parent[e];
        c.assign(pe, x);
        used[g.edge(pe).u].insert(x);
        used[g.edge(pe).v].insert(x);
      }
      for (Vertex v : sub.vertex_to_parent) {
        for (int other : blocks_at[v]) {
          if (!seen[other]) {
            seen[other] = 1;
            q.push({other, v});
          }
        }
      }
    }
  }

  out.coloring = c.normalized();
  r.algorithm = "auto";
  for (const std::string& a : algos) r.algorithm += (a == *algos.begin() ? ":" : "+") + a;
  r.colors_used = out.coloring.palette_size();
  r.verified = verify_bcoloring(g, out.coloring).ok();
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return out;
}

}  // namespace rainbow4
