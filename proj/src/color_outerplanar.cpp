#include <algorithm>
#include <string>

#include "rainbow4/bcolor.hpp"

namespace rainbow4 {
namespace {

// A boundary face of a piece: the chord joins positions s and s+t (mod k)
// and the outer path between them carries no further chord.
struct Face {
  int s;
  int t;
};

class OuterplanarColorer {
 public:
  explicit OuterplanarColorer(const Graph& g)
      : g_(g), delta_(g.max_degree()), palette_(delta_ + 1), c_(g.num_edges()) {}

  EdgeColoring run(const std::vector<Vertex>& order) {
    color_piece(order);
    return c_;
  }

 private:
  EdgeId edge(Vertex a, Vertex b) const { return *g_.find_edge(a, b); }

  void fail(const std::string& why) const {
    throw Error(ErrorCode::kCaseExhaustion, "outerplanar: " + why);
  }

  std::vector<Color> colors_at(Vertex v) const {
    std::vector<Color> out;
    for (EdgeId e : g_.incident(v)) {
      if (c_.assigned(e)) out.push_back(c_.color(e));
    }
    return out;
  }

  std::vector<Color> free_for(EdgeId e) const {
    std::vector<Color> bad = forbidden_colors(g_, c_, e);
    std::vector<Color> out;
    for (Color x = 1; x <= palette_; ++x) {
      if (!std::binary_search(bad.begin(), bad.end(), x)) out.push_back(x);
    }
    return out;
  }

  // The new edges must avoid every colored L+ neighbour.
  void check_local(const std::vector<EdgeId>& fresh, const char* step) const {
    for (EdgeId e : fresh) {
      if (!c_.assigned(e)) fail(std::string(step) + ": edge left uncolored");
      for (EdgeId f : lplus_neighbors(g_, e)) {
        if (c_.assigned(f) && c_.color(f) == c_.color(e)) {
          fail(std::string(step) + ": edges " + std::to_string(e) + " and " +
               std::to_string(f) + " clash");
        }
      }
    }
  }

  void color_piece(const std::vector<Vertex>& p) {
    const int k = static_cast<int>(p.size());
    auto at = [&](int i) { return p[((i % k) + k) % k]; };
    auto cyc = [&](int i) { return edge(at(i), at(i + 1)); };

    std::vector<std::pair<int, int>> chords;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 2; b < k; ++b) {
        if (a == 0 && b == k - 1) continue;
        if (g_.adjacent(p[a], p[b])) chords.emplace_back(a, b);
      }
    }

    if (chords.empty()) {
      // A bare cycle: C4 takes 4 colors, even cycles alternate 1,2 and odd
      // cycles close with a 3.
      for (int i = 0; i < k; ++i) {
        Color x = i % 2 + 1;
        if (k == 4) x = i + 1;
        if (k % 2 == 1 && i == k - 1) x = 3;
        c_.assign(cyc(i), x);
      }
      return;
    }
    if (k == 4) {
      // K4 - e: all five edges pairwise conflict.
      for (int i = 0; i < 4; ++i) c_.assign(cyc(i), i + 1);
      c_.assign(edge(p[chords[0].first], p[chords[0].second]), 5);
      return;
    }

    std::vector<int> deg(k, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i != j && g_.adjacent(p[i], p[j])) ++deg[i];
      }
    }

    std::vector<Face> faces;
    for (const auto& [a, b] : chords) {
      bool inside = true;
      bool outside = true;
      for (const auto& [x, y] : chords) {
        if (x == a && y == b) continue;
        if (a <= x && y <= b) inside = false;
        if (y <= a || x >= b || (x <= a && y >= b)) outside = false;
      }
      if (inside) faces.push_back({a, b - a});
      if (outside) faces.push_back({b, k - (b - a)});
    }

    for (const Face& f : faces) {
      if (f.t == 2) {
        const int i = f.s % k;
        const int j = (f.s + 2) % k;
        bool inner_triangle = false;
        for (int l = 0; l < k; ++l) {
          if (l != i && l != j && l != (f.s + 1) % k &&
              g_.adjacent(p[l], p[i]) && g_.adjacent(p[l], p[j])) {
            inner_triangle = true;
          }
        }
        if (deg[i] == delta_ && deg[j] == delta_ && inner_triangle) continue;
      }
      std::vector<Vertex> rest;
      for (int i = 0; i < k; ++i) {
        int off = ((i - f.s) % k + k) % k;
        if (off == 0 || off >= f.t) rest.push_back(p[i]);
      }
      color_piece(rest);
      extend_path(p, f);
      return;
    }
    two_triangles(p, deg);
  }

  // Colors the outer path of an unblocked boundary face.
  void extend_path(const std::vector<Vertex>& p, const Face& f) {
    const int k = static_cast<int>(p.size());
    auto at = [&](int i) { return p[((i % k) + k) % k]; };
    const Vertex vi = at(f.s);
    const Vertex vj = at(f.s + f.t);
    std::vector<EdgeId> path;
    for (int m = 0; m < f.t; ++m) path.push_back(edge(at(f.s + m), at(f.s + m + 1)));

    if (f.t >= 3) {
      std::vector<Color> used_i = colors_at(vi);
      std::vector<Color> used_j = colors_at(vj);
      auto missing = [&](const std::vector<Color>& used, Color skip1,
                         Color skip2) {
        for (Color x = 1; x <= palette_; ++x) {
          if (x != skip1 && x != skip2 &&
              std::find(used.begin(), used.end(), x) == used.end()) {
            return x;
          }
        }
        return kNoColor;
      };
      const Color a = missing(used_i, kNoColor, kNoColor);
      const Color b = missing(used_j, a, kNoColor);
      const Color x = missing({c_.color(edge(vi, vj))}, a, b);
      if (!a || !b || !x) fail("no colors for a face of length " + std::to_string(f.t + 1));
      // a first, b last; odd lengths spend one x right after a.
      c_.assign(path[0], a);
      int m = 1;
      if (f.t % 2 == 1) c_.assign(path[m++], x);
      for (Color next = b; m < f.t; ++m, next = next == a ? b : a) {
        c_.assign(path[m], next);
      }
    } else {
      // A triangle face: the inner triangle, if any, shows up in the free
      // sets. The tighter end is colored first.
      std::vector<Color> fa = free_for(path[0]);
      std::vector<Color> fb = free_for(path[1]);
      auto first_other = [](const std::vector<Color>& s, Color avoid) {
        for (Color x : s) {
          if (x != avoid) return x;
        }
        return kNoColor;
      };
      Color a, b;
      if (fa.size() <= fb.size()) {
        a = first_other(fa, kNoColor);
        b = first_other(fb, a);
      } else {
        b = first_other(fb, kNoColor);
        a = first_other(fa, b);
      }
      if (!a || !b) fail("boundary triangle has no free colors");
      c_.assign(path[0], a);
      c_.assign(path[1], b);
    }
    check_local(path, "face extension");
  }

  // Every boundary face is a blocked triangle: find two neighbouring
  // boundary triangles v1v2v3, v3v4v5 over the common inner triangle
  // v1v3v5.
  void two_triangles(const std::vector<Vertex>& p, const std::vector<int>& deg) {
    const int k = static_cast<int>(p.size());
    auto at = [&](int i) { return p[((i % k) + k) % k]; };
    int s = -1;
    for (int i = 0; i < k && s < 0; ++i) {
      if (deg[(i + 1) % k] == 2 && deg[(i + 3) % k] == 2 &&
          g_.adjacent(at(i), at(i + 2)) && g_.adjacent(at(i + 2), at(i + 4)) &&
          g_.adjacent(at(i), at(i + 4))) {
        s = i;
      }
    }
    if (s < 0) fail("all boundary faces blocked but no shared inner triangle");
    if (delta_ != 4) {
      fail("shared inner triangle with max degree " + std::to_string(delta_));
    }
    const Vertex v1 = at(s), v2 = at(s + 1), v3 = at(s + 2), v4 = at(s + 3),
                 v5 = at(s + 4);
    const std::vector<EdgeId> fresh = {edge(v1, v2), edge(v2, v3), edge(v3, v4),
                                       edge(v4, v5), edge(v1, v3), edge(v3, v5)};

    if (k == 5) {
      c_.assign(edge(v1, v3), 1);
      c_.assign(edge(v3, v5), 2);
      c_.assign(edge(v1, v5), 3);
      c_.assign(edge(v1, v2), 4);
      c_.assign(edge(v3, v4), 4);
      c_.assign(edge(v2, v3), 5);
      c_.assign(edge(v4, v5), 5);
      check_local(fresh, "five-vertex pattern");
      return;
    }

    std::vector<Vertex> rest;
    for (int i = 0; i < k; ++i) {
      int off = ((i - s) % k + k) % k;
      if (off == 0 || off >= 4) rest.push_back(p[i]);
    }
    color_piece(rest);

    const Vertex v6 = at(s + 5);
    const Vertex vn = at(s - 1);
    const EdgeId e15 = edge(v1, v5), e1n = edge(v1, vn), e56 = edge(v5, v6);
    Color a = c_.color(e15);
    Color b = c_.color(e1n);

    if (c_.color(e56) == b) {
      // Case 2: move b off v1vn or v5v6; failing that, swap in
      // v1v5 -> some x, v5v6 -> a.
      bool moved = false;
      for (EdgeId e : {e1n, e56}) {
        std::vector<Color> bad = forbidden_colors(g_, c_, e);
        for (Color x = 1; x <= palette_ && !moved; ++x) {
          if (x == a || x == b || std::binary_search(bad.begin(), bad.end(), x)) {
            continue;
          }
          c_.assign(e, x);
          moved = true;
        }
        if (moved) break;
      }
      if (!moved) {
        const Color old_a = a;
        for (Color x = 1; x <= palette_ && !moved; ++x) {
          if (x == a || x == b) continue;
          c_.assign(e15, x);
          c_.assign(e56, old_a);
          bool ok = true;
          for (EdgeId e : {e15, e56}) {
            for (EdgeId f : lplus_neighbors(g_, e)) {
              if (c_.assigned(f) && c_.color(f) == c_.color(e)) ok = false;
            }
          }
          if (ok) moved = true;
        }
        if (!moved) fail("case 2 recoloring found no option");
      }
      a = c_.color(e15);
      b = c_.color(e1n);
    }

    // Case 1: a, b, c distinct; d, e are the two remaining colors.
    const Color c = c_.color(e56);
    std::vector<Color> rest_colors;
    for (Color x = 1; x <= palette_; ++x) {
      if (x != a && x != b && x != c) rest_colors.push_back(x);
    }
    if (a == b || a == c || b == c || rest_colors.size() < 2) {
      fail("case 1 preconditions do not hold");
    }
    c_.assign(edge(v1, v2), c);
    c_.assign(edge(v3, v4), c);
    c_.assign(edge(v2, v3), b);
    c_.assign(edge(v4, v5), b);
    c_.assign(edge(v1, v3), rest_colors[0]);
    c_.assign(edge(v3, v5), rest_colors[1]);
    check_local(fresh, "shared inner triangle extension");
  }

  const Graph& g_;
  int delta_;
  int palette_;
  EdgeColoring c_;
};

}  // namespace

EdgeColoring color_outerplanar(const Graph& g, const OuterplanarLayout& layout) {
  if (!is_two_connected(g)) {
    throw Error(ErrorCode::kNotTwoConnected, "color_outerplanar");
  }
  if (auto err = validate_layout(g, layout)) {
    throw Error(ErrorCode::kLayoutMismatch, *err);
  }
  EdgeColoring c = OuterplanarColorer(g).run(layout.order);
  if (!verify_bcoloring(g, c).ok()) {
    throw Error(ErrorCode::kCaseExhaustion,
                "outerplanar: assembled coloring fails verification");
  }
  return c;
}

}  // namespace rainbow4
