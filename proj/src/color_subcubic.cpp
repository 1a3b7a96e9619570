#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "rainbow4/bcolor.hpp"

namespace rainbow4 {
namespace {

constexpr int kPalette = 6;

// One color decision of a case rule: every edge in `edges` gets the same
// color, drawn from 1..6 minus `fixed_out` and minus the colors chosen for
// the slots listed in `excl`. A non-empty `only` pins the candidates.
struct Slot {
  std::vector<EdgeId> edges;
  std::vector<int> excl;
  std::vector<Color> only;
};

class SlotSolver {
 public:
  SlotSolver(const Graph& g, EdgeColoring& c, std::vector<Slot> slots)
      : g_(g), c_(c), slots_(std::move(slots)), chosen_(slots_.size(), 0) {}

  bool solve() { return place(0); }

 private:
  bool consistent(EdgeId e) const {
    for (EdgeId f : lplus_neighbors(g_, e)) {
      if (c_.assigned(f) && c_.color(f) == c_.color(e)) return false;
    }
    return true;
  }

  bool place(std::size_t i) {
    if (i == slots_.size()) return true;
    const Slot& s = slots_[i];
    std::vector<Color> cands = s.only;
    if (cands.empty()) {
      for (Color x = 1; x <= kPalette; ++x) cands.push_back(x);
    }
    for (Color x : cands) {
      bool taken = std::any_of(s.excl.begin(), s.excl.end(),
                               [&](int j) { return chosen_[j] == x; });
      if (taken) continue;
      for (EdgeId e : s.edges) c_.assign(e, x);
      bool ok = std::all_of(s.edges.begin(), s.edges.end(),
                            [&](EdgeId e) { return consistent(e); });
      chosen_[i] = x;
      if (ok && place(i + 1)) return true;
      for (EdgeId e : s.edges) c_.clear(e);
      chosen_[i] = 0;
    }
    return false;
  }

  const Graph& g_;
  EdgeColoring& c_;
  std::vector<Slot> slots_;
  std::vector<Color> chosen_;
};

// The removed 4-cycle in a chosen orientation, with each cycle vertex's
// outside neighbour. A vertex of degree 2 gets a unique negative stand-in
// that equals nothing and is adjacent to nothing.
struct Frame {
  std::array<Vertex, 4> v;
  std::array<EdgeId, 4> cyc;                // v_i v_{i+1}
  std::array<std::optional<EdgeId>, 4> out; // v_i x_i
  std::array<Vertex, 4> x;
};

Frame make_frame(const Graph& g, const std::array<Vertex, 4>& v) {
  Frame f;
  f.v = v;
  for (int i = 0; i < 4; ++i) {
    f.cyc[i] = *g.find_edge(v[i], v[(i + 1) % 4]);
    f.x[i] = -(i + 1);
    for (EdgeId e : g.incident(v[i])) {
      Vertex w = g.edge(e).other(v[i]);
      if (std::find(v.begin(), v.end(), w) == v.end()) {
        f.out[i] = e;
        f.x[i] = w;
      }
    }
  }
  return f;
}

// The eight rotations and reflections of a cycle order.
std::vector<std::array<Vertex, 4>> dihedral(const std::array<Vertex, 4>& v) {
  std::vector<std::array<Vertex, 4>> out;
  for (int r = 0; r < 4; ++r) {
    out.push_back({v[r], v[(r + 1) % 4], v[(r + 2) % 4], v[(r + 3) % 4]});
    out.push_back({v[r], v[(r + 3) % 4], v[(r + 2) % 4], v[(r + 1) % 4]});
  }
  return out;
}

std::vector<EdgeId> present(std::initializer_list<std::optional<EdgeId>> es) {
  std::vector<EdgeId> out;
  for (const auto& e : es) {
    if (e) out.push_back(*e);
  }
  return out;
}

// Four cycle-edge slots drawing from the palette minus the given slots.
void add_cycle_slots(std::vector<Slot>& slots, const Frame& f,
                     std::vector<int> excl, std::initializer_list<int> which =
                                                {0, 1, 2, 3}) {
  for (int i : which) slots.push_back({{f.cyc[i]}, excl, {}});
}

class SubcubicColorer {
 public:
  explicit SubcubicColorer(const Graph& g) : g_(g) {}

  EdgeColoring run() {
    std::vector<FourCycle> cycles = enumerate_c4(g_);
    if (cycles.empty()) return proper_edge_color(g_);

    const FourCycle& cyc = cycles.front();
    Subgraph h = remove_vertices(g_, cyc.vertices);
    EdgeColoring sub = SubcubicColorer(h.graph).run();
    EdgeColoring c(g_.num_edges());
    for (EdgeId e = 0; e < h.graph.num_edges(); ++e) {
      c.assign(h.edge_to_parent[e], sub.color(e));
    }
    extend(c, cyc.vertices);
    return c;
  }

 private:
  bool adj(Vertex a, Vertex b) const {
    return a >= 0 && b >= 0 && g_.adjacent(a, b);
  }

  void extend(EdgeColoring& c, const std::array<Vertex, 4>& base) {
    const Vertex* v = base.data();
    bool chord02 = g_.adjacent(v[0], v[2]);
    bool chord13 = g_.adjacent(v[1], v[3]);
    std::vector<Slot> slots;
    std::string rule;

    if (chord02 && chord13) {
      // Case 1: a K4 component; six distinct colors.
      rule = "1";
      std::vector<EdgeId> es;
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) es.push_back(*g_.find_edge(v[i], v[j]));
      }
      for (std::size_t i = 0; i < es.size(); ++i) {
        std::vector<int> excl;
        for (std::size_t j = 0; j < i; ++j) excl.push_back(static_cast<int>(j));
        slots.push_back({{es[i]}, excl, {}});
      }
    } else if (chord02 || chord13) {
      // Case 2: one chord, taken as v0v2.
      Frame f = make_frame(g_, chord02 ? base
                                       : std::array<Vertex, 4>{v[1], v[2], v[3],
                                                               v[0]});
      EdgeId chord = *g_.find_edge(f.v[0], f.v[2]);
      if (f.x[1] != f.x[3]) {
        rule = "2 (distinct outside neighbours)";
        slots.push_back({present({f.out[1], f.out[3]}), {}, {}});
        slots.push_back({{chord}, {0}, {}});
        add_cycle_slots(slots, f, {0});
      } else {
        rule = "2 (common outside neighbour)";
        slots.push_back({present({f.out[3]}), {}, {}});
        slots.back().edges.push_back(chord);
        slots.push_back({present({f.out[1]}), {0}, {}});
        add_cycle_slots(slots, f, {0, 1});
      }
    } else {
      slots = case3(base, rule);
    }

    if (!SlotSolver(g_, c, slots).solve()) {
      throw Error(ErrorCode::kCaseExhaustion,
                  "subcubic case " + rule + " found no extension at cycle " +
                      std::to_string(v[0]) + "-" + std::to_string(v[1]) + "-" +
                      std::to_string(v[2]) + "-" + std::to_string(v[3]));
    }
  }

  // Case 3: the cycle is induced. Sub-cases by which outside neighbours
  // coincide, each tried in every orientation.
  std::vector<Slot> case3(const std::array<Vertex, 4>& base,
                          std::string& rule) {
    const auto orients = dihedral(base);
    auto find = [&](auto pred) -> std::optional<Frame> {
      for (const auto& o : orients) {
        Frame f = make_frame(g_, o);
        if (pred(f.x)) return f;
      }
      return std::nullopt;
    };
    std::vector<Slot> slots;

    // 3.a: four different outside neighbours. e0,e2 share a; e1,e3 share
    // b; the cycle takes the other four colors, shifted around the cycle
    // until no cycle edge repeats the color of the X-edge facing it.
    if (auto f = find([](const auto& x) {
          return x[0] != x[1] && x[0] != x[2] && x[0] != x[3] &&
                 x[1] != x[2] && x[1] != x[3] && x[2] != x[3];
        })) {
      rule = "3.a";
      slots.push_back({present({f->out[0], f->out[2]}), {}, {}});
      slots.push_back({present({f->out[1], f->out[3]}), {0}, {}});
      add_cycle_slots(slots, *f, {0, 1});
      return with_cycle_distinct(slots, 2);
    }
    // 3.b: opposite vertices share neighbours X (v0,v2) and Y (v1,v3).
    if (auto f = find([](const auto& x) {
          return x[0] >= 0 && x[1] >= 0 && x[0] == x[2] && x[1] == x[3];
        })) {
      rule = "3.b";
      slots.push_back({present({f->out[0], f->out[1]}), {}, {}});
      slots.push_back({present({f->out[2], f->out[3]}), {0}, {}});
      add_cycle_slots(slots, *f, {0, 1});
      return with_cycle_distinct(slots, 2);
    }
    // 3.c: neighbouring vertices share: X for v0,v1 and Y for v2,v3.
    if (auto f = find([](const auto& x) {
          return x[0] >= 0 && x[2] >= 0 && x[0] == x[1] && x[2] == x[3];
        })) {
      if (adj(f->x[0], f->x[2])) {
        // The prism is a whole component; fixed pattern.
        rule = "3.c (prism)";
        EdgeId xy = *g_.find_edge(f->x[0], f->x[2]);
        auto pin = [&](EdgeId e, Color col) {
          slots.push_back({{e}, {}, {col}});
        };
        pin(xy, 6);
        pin(f->cyc[0], 1);
        pin(*f->out[1], 2);
        pin(*f->out[0], 3);
        pin(f->cyc[3], 4);
        pin(f->cyc[1], 5);
        pin(f->cyc[2], 3);
        pin(*f->out[2], 1);
        pin(*f->out[3], 2);
        return slots;
      }
      rule = "3.c";
      slots.push_back({present({f->out[0], f->out[2]}), {}, {}});
      slots.push_back({present({f->out[1], f->out[3]}), {0}, {}});
      add_cycle_slots(slots, *f, {0, 1});
      return with_cycle_distinct(slots, 2);
    }
    // 3.f: one neighbour X serves v0, v2 and v3.
    if (auto f = find([](const auto& x) {
          return x[0] >= 0 && x[0] == x[2] && x[0] == x[3] && x[1] != x[0];
        })) {
      rule = "3.f";
      slots.push_back({present({f->out[0], f->out[1]}), {}, {}});
      slots.push_back({present({f->out[2]}), {0}, {}});
      slots.push_back({present({f->out[3]}), {0, 1}, {}});
      add_cycle_slots(slots, *f, {0, 1});
      return with_cycle_distinct(slots, 3);
    }
    // 3.d: only v0 and v2 share X, and X is not adjacent to x3.
    if (auto f = find([&](const auto& x) {
          return x[0] >= 0 && x[0] == x[2] && x[1] != x[3] && x[1] != x[0] &&
                 x[3] != x[0] && !adj(x[0], x[3]);
        })) {
      rule = "3.d";
      slots.push_back({present({f->out[0], f->out[3]}), {}, {}});
      slots.push_back({present({f->out[2]}), {0}, {}});
      slots.push_back({present({f->out[1]}), {0, 1}, {}});
      slots.back().edges.push_back(f->cyc[3]);
      add_cycle_slots(slots, *f, {0, 1, 2}, {0, 1, 2});
      return with_cycle_distinct(slots, 3);
    }
    // 3.e: only v2 and v3 share Y, and Y is not adjacent to x0.
    if (auto f = find([&](const auto& x) {
          return x[2] >= 0 && x[2] == x[3] && x[0] != x[1] && x[0] != x[2] &&
                 x[1] != x[2] && !adj(x[0], x[2]);
        })) {
      rule = "3.e";
      slots.push_back({present({f->out[0], f->out[2]}), {}, {}});
      slots.push_back({present({f->out[1], f->out[3]}), {0}, {}});
      add_cycle_slots(slots, *f, {0, 1});
      return with_cycle_distinct(slots, 2);
    }
    rule = "3 (unmatched)";
    throw Error(ErrorCode::kCaseExhaustion,
                "subcubic case 3: no sub-case matches cycle " +
                    std::to_string(base[0]) + "-" + std::to_string(base[1]) +
                    "-" + std::to_string(base[2]) + "-" +
                    std::to_string(base[3]));
  }

  // Cycle slots (everything after the first `head` slots) also avoid each
  // other's colors: the four cycle edges form a 4-cycle.
  static std::vector<Slot> with_cycle_distinct(std::vector<Slot> slots,
                                               int head) {
    for (std::size_t i = head; i < slots.size(); ++i) {
      for (std::size_t j = head; j < i; ++j) {
        slots[i].excl.push_back(static_cast<int>(j));
      }
    }
    return slots;
  }

  const Graph& g_;
};

}  // namespace

EdgeColoring color_subcubic(const Graph& g) {
  if (g.max_degree() > 3) {
    throw Error(ErrorCode::kNotSubcubic,
                "maximum degree " + std::to_string(g.max_degree()));
  }
  if (!is_planar(g)) throw Error(ErrorCode::kNotPlanar, "color_subcubic");
  return SubcubicColorer(g).run();
}

}  // namespace rainbow4
