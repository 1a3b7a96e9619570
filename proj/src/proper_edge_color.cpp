#include <algorithm>
#include <stdexcept>

#include "rainbow4/bcolor.hpp"

namespace rainbow4 {
namespace {

// Misra-Gries fan / alternating-path edge coloring with colors 1..D+1.
class MisraGries {
 public:
  explicit MisraGries(const Graph& g)
      : g_(g),
        k_(g.max_degree() + 1),
        c_(g.num_edges()),
        at_(g.num_vertices(), std::vector<EdgeId>(k_ + 1, -1)) {}

  EdgeColoring run() {
    for (EdgeId e = 0; e < g_.num_edges(); ++e) color_edge(e);
    return c_;
  }

 private:
  bool is_free(Vertex x, Color c) const { return at_[x][c] < 0; }

  Color free_color(Vertex x) const {
    for (Color c = 1; c <= k_; ++c) {
      if (is_free(x, c)) return c;
    }
    throw std::logic_error("Misra-Gries: no free color");
  }

  void set(EdgeId e, Color c) {
    const Edge& ed = g_.edge(e);
    if (c_.assigned(e)) {
      at_[ed.u][c_.color(e)] = -1;
      at_[ed.v][c_.color(e)] = -1;
      c_.clear(e);
    }
    if (c != kNoColor) {
      c_.assign(e, c);
      at_[ed.u][c] = e;
      at_[ed.v][c] = e;
    }
  }

  EdgeId edge_between(Vertex a, Vertex b) const { return *g_.find_edge(a, b); }

  void color_edge(EdgeId e) {
    const Vertex u = g_.edge(e).u;
    std::vector<Vertex> fan{g_.edge(e).v};
    std::vector<char> in_fan(g_.num_vertices(), 0);
    in_fan[fan[0]] = 1;
    for (bool grown = true; grown;) {
      grown = false;
      for (EdgeId f : g_.incident(u)) {
        Vertex w = g_.edge(f).other(u);
        if (in_fan[w] || !c_.assigned(f) || !is_free(fan.back(), c_.color(f))) {
          continue;
        }
        fan.push_back(w);
        in_fan[w] = 1;
        grown = true;
        break;
      }
    }

    const Color c = free_color(u);
    const Color d = free_color(fan.back());
    invert_path(u, c, d);

    std::size_t stop = 0;
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        EdgeId f = edge_between(u, fan[i]);
        if (!c_.assigned(f) || !is_free(fan[i - 1], c_.color(f))) break;
      }
      stop = i;
      if (is_free(fan[i], d)) break;
    }
    if (!is_free(fan[stop], d)) {
      throw std::logic_error("Misra-Gries: no fan vertex frees d");
    }
    for (std::size_t i = 0; i < stop; ++i) {
      Color next = c_.color(edge_between(u, fan[i + 1]));
      set(edge_between(u, fan[i + 1]), kNoColor);
      set(edge_between(u, fan[i]), next);
    }
    set(edge_between(u, fan[stop]), d);
  }

  // Swaps c and d along the maximal path from u that starts with color d.
  void invert_path(Vertex u, Color c, Color d) {
    if (c == d) return;
    std::vector<EdgeId> path;
    Vertex x = u;
    Color want = d;
    while (at_[x][want] >= 0) {
      EdgeId f = at_[x][want];
      path.push_back(f);
      x = g_.edge(f).other(x);
      want = want == d ? c : d;
    }
    std::vector<Color> old;
    for (EdgeId f : path) old.push_back(c_.color(f));
    for (EdgeId f : path) set(f, kNoColor);
    for (std::size_t i = 0; i < path.size(); ++i) {
      set(path[i], old[i] == c ? d : c);
    }
  }

  const Graph& g_;
  int k_;
  EdgeColoring c_;
  std::vector<std::vector<EdgeId>> at_;
};

}  // namespace

EdgeColoring proper_edge_color(const Graph& g) { return MisraGries(g).run(); }

}  // namespace rainbow4
