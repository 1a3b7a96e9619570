#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "helpers.hpp"
#include "rainbow4/bcolor.hpp"

using namespace rainbow4;
using testing::make;
using testing::named;

namespace {

EdgeColoring colors(std::initializer_list<Color> cs) {
  EdgeColoring c(static_cast<int>(cs.size()));
  EdgeId e = 0;
  for (Color x : cs) c.assign(e++, x);
  return c;
}

void check_b(const Graph& g, const EdgeColoring& c, int bound) {
  VerifyReport r = verify_bcoloring(g, c);
  CHECK(r.ok());
  CHECK(r.colors_used <= bound);
}

void check_matchings(const Graph& g, const MatchingDecomposition& d) {
  CHECK(static_cast<int>(d.matchings.size()) == g.max_degree());
  std::vector<int> seen(g.num_edges(), 0);
  for (const auto& m : d.matchings) {
    std::set<Vertex> ends;
    for (EdgeId e : m) {
      ++seen[e];
      CHECK(ends.insert(g.edge(e).u).second);
      CHECK(ends.insert(g.edge(e).v).second);
    }
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
}

bool two_colorable(const SimpleGraph& h) {
  std::vector<int> side(h.size(), -1);
  for (int s = 0; s < h.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < h.size(); ++w) {
        if (!h.adjacent(v, w)) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph with_isolated(const Graph& g) {
  Graph out(g.num_vertices() + 1);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kUnsupported;
}

}  // namespace

TEST_CASE("verify_bcoloring examples") {
  Graph c4 = named("cycle", {4});
  VerifyReport bad = verify_bcoloring(c4, colors({1, 2, 1, 2}));
  CHECK(bad.proper);
  CHECK_FALSE(bad.rainbow);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].kind == ViolationKind::kRepeatedColorOnC4);
  CHECK(bad.violations[0].cycle.has_value());

  VerifyReport good = verify_bcoloring(c4, colors({1, 2, 3, 4}));
  CHECK(good.ok());
  CHECK(good.colors_used == 4);

  VerifyReport clash = verify_bcoloring(named("path", {3}), colors({5, 5}));
  CHECK_FALSE(clash.proper);
  CHECK(clash.violations[0].kind == ViolationKind::kAdjacentSameColor);
  CHECK(clash.violations[0].edges == std::vector<EdgeId>{0, 1});

  EdgeColoring partial(4);
  partial.assign(0, 1);
  CHECK(code_of([&] { verify_bcoloring(c4, partial); }) == ErrorCode::kPartialColoring);
}

TEST_CASE("forbidden_colors examples") {
  Graph c4 = named("cycle", {4});
  EdgeColoring p(4);
  p.assign(0, 1);
  p.assign(1, 2);
  p.assign(2, 3);
  CHECK(forbidden_colors(c4, p, 3) == std::vector<Color>{1, 2, 3});

  Graph star = make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EdgeColoring s(4);
  s.assign(0, 1);
  s.assign(1, 2);
  s.assign(2, 3);
  CHECK(forbidden_colors(star, s, 3) == std::vector<Color>{1, 2, 3});

  Graph k4e = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  EdgeColoring q(5);
  for (EdgeId e = 0; e < 4; ++e) q.assign(e, e + 1);
  CHECK(forbidden_colors(k4e, q, 4) == std::vector<Color>{1, 2, 3, 4});
  CHECK(code_of([&] { forbidden_colors(k4e, q, 9); }) == ErrorCode::kUnknownEdge);
}

TEST_CASE("qb_exact examples") {
  QbResult k6 = qb_exact(named("k6-minus-pm"));
  CHECK(k6.k == 12);
  CHECK(verify_bcoloring(named("k6-minus-pm"), k6.coloring).ok());
  CHECK(qb_exact(named("complete-bipartite", {2, 3})).k == 6);
  CHECK(qb_exact(named("complete-bipartite", {2, 5})).k == 10);
  QbResult fan = qb_exact(named("fan", {4}));
  CHECK(fan.k == 5);
  CHECK(fan.coloring.distinct_colors() == 5);
  CHECK(qb_exact(Graph(3)).k == 0);
  CHECK(code_of([] { qb_exact(named("complete", {12})); }) == ErrorCode::kSizeCapExceeded);
}

TEST_CASE("qb_exact_direct examples") {
  CHECK(qb_exact_direct(named("cycle", {4})).k == 4);
  CHECK(qb_exact_direct(named("complete-minus-edge", {4})).k == 5);
  QbResult c6 = qb_exact_direct(named("cycle", {6}));
  CHECK(c6.k == 2);
  CHECK(verify_bcoloring(named("cycle", {6}), c6.coloring).ok());
  CHECK(code_of([] { qb_exact_direct(named("complete", {7})); }) ==
        ErrorCode::kSizeCapExceeded);
}

TEST_CASE("both exact oracles agree on small graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = testing::gnp(7, 0.35 + 0.05 * (seed % 4), seed);
    if (g.num_edges() > 14) continue;
    QbResult a = qb_exact(g);
    QbResult b = qb_exact_direct(g);
    CHECK(a.k == b.k);
    CHECK(verify_bcoloring(g, a.coloring).ok());
    CHECK(verify_bcoloring(g, b.coloring).ok());
    CHECK(omega_line_plus(g) <= a.k);
  }
}

TEST_CASE("color_planar examples") {
  Graph ico = named("icosahedron");
  check_b(ico, color_planar(ico), 18);
  Graph c4 = named("cycle", {4});
  check_b(c4, color_planar(c4), 16);
  CHECK(code_of([] { color_planar(named("complete", {5})); }) == ErrorCode::kNotPlanar);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 5 + static_cast<int>(seed % 30);
    Graph g = random_planar(n, std::max(n, 3 * n - 6 - static_cast<int>(seed % 7)), seed);
    check_b(g, color_planar(g), 2 * g.max_degree() + 8);
  }
}

TEST_CASE("konig_edge_coloring examples") {
  for (const Graph& g : {named("cycle", {6}), named("complete-bipartite", {3, 3}),
                         named("grid", {4, 4}), named("cube")}) {
    MatchingDecomposition d = konig_edge_coloring(g);
    check_matchings(g, d);
  }
  MatchingDecomposition k33 = konig_edge_coloring(named("complete-bipartite", {3, 3}));
  for (const auto& m : k33.matchings) CHECK(m.size() == 3);
  CHECK(code_of([] { konig_edge_coloring(named("cycle", {5})); }) == ErrorCode::kNotBipartite);
}

TEST_CASE("color_bipartite_planar examples") {
  Graph grid = named("grid", {5, 5});
  BipartiteTrace trace;
  EdgeColoring c = color_bipartite_planar(grid, &trace);
  check_b(grid, c, 8);
  for (const SimpleGraph& f : trace.fm) CHECK(two_colorable(f));
  check_b(named("cycle", {6}), color_bipartite_planar(named("cycle", {6})), 4);
  for (int d = 3; d <= 6; ++d) {
    Graph k = named("complete-bipartite", {2, d});
    EdgeColoring kc = color_bipartite_planar(k);
    check_b(k, kc, 2 * d);
    CHECK(kc.distinct_colors() == 2 * d);
    if (d <= 5) CHECK(qb_exact(k).k == 2 * d);
  }
  CHECK(code_of([] { color_bipartite_planar(named("cycle", {5})); }) ==
        ErrorCode::kNotBipartite);
  CHECK(code_of([] { color_bipartite_planar(named("complete-bipartite", {3, 3})); }) ==
        ErrorCode::kNotPlanar);
}

TEST_CASE("proper_edge_color examples") {
  CHECK(proper_edge_color(named("cycle", {5})).palette_size() == 3);
  Graph dod = named("dodecahedron");
  EdgeColoring c = proper_edge_color(dod);
  CHECK(c.palette_size() <= 4);
  CHECK(verify_bcoloring(dod, c).proper);
  EdgeColoring k4 = proper_edge_color(named("complete", {4}));
  CHECK(k4.palette_size() <= 4);
  CHECK(verify_bcoloring(named("complete", {4}), k4).proper);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = testing::gnp(12, 0.4, seed);
    EdgeColoring pc = proper_edge_color(g);
    CHECK(pc.is_total() == true);
    CHECK(verify_bcoloring(g, pc).proper);
    CHECK(pc.palette_size() <= g.max_degree() + 1);
  }
}

TEST_CASE("color_subcubic examples") {
  for (const Graph& g : {named("complete", {4}), named("cube"), named("prism", {3}),
                         named("prism", {5}), named("dodecahedron"), named("cycle", {4}),
                         named("complete-minus-edge", {4})}) {
    check_b(g, color_subcubic(g), 6);
  }
  // The 6-color bound is met by K4; the triangular prism needs only 5.
  CHECK(qb_exact(named("complete", {4})).k == 6);
  CHECK(qb_exact(named("prism", {3})).k == 5);
  CHECK(qb_exact_direct(named("prism", {3})).k == 5);
  CHECK(code_of([] { color_subcubic(named("fan", {4})); }) == ErrorCode::kNotSubcubic);
  CHECK(code_of([] { color_subcubic(named("complete-bipartite", {3, 3})); }) ==
        ErrorCode::kNotPlanar);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Triangulation t = random_triangulation(4 + static_cast<int>(seed % 12), seed);
    Graph g = dual_of(t);
    check_b(g, color_subcubic(g), 6);
  }
}

TEST_CASE("color_outerplanar examples") {
  Graph fan = named("fan", {4});
  EdgeColoring fc = color_outerplanar(fan, outer_cycle(fan));
  check_b(fan, fc, 5);
  CHECK(qb_exact(fan).k == 5);
  Graph c7 = named("cycle", {7});
  check_b(c7, color_outerplanar(c7, outer_cycle(c7)), 3);
  Graph fan9 = named("fan", {8});
  check_b(fan9, color_outerplanar(fan9, outer_cycle(fan9)), fan9.max_degree() + 1);
  Graph c4 = named("cycle", {4});
  check_b(c4, color_outerplanar(c4, outer_cycle(c4)), 4);
  Graph k4e = named("complete-minus-edge", {4});
  check_b(k4e, color_outerplanar(k4e, outer_cycle(k4e)), 5);

  OuterplanarLayout wrong = outer_cycle(named("cycle", {5}));
  CHECK(code_of([&] { color_outerplanar(named("fan", {3}), wrong); }) ==
        ErrorCode::kLayoutMismatch);
  CHECK(code_of([] {
          Graph p = named("path", {4});
          color_outerplanar(p, OuterplanarLayout{{0, 1, 2, 3}, {}});
        }) == ErrorCode::kNotTwoConnected);

  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    OuterplanarSample s = random_outerplanar(4 + static_cast<int>(seed % 30),
                                             0.3 + 0.1 * (seed % 8), seed);
    EdgeColoring c = color_outerplanar(s.graph, s.layout);
    check_b(s.graph, c, *theoretical_bound(s.graph, GraphClass::kOuterplanar));
  }
}

TEST_CASE("color_auto examples") {
  Graph bowtie = make(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  AutoResult b = color_auto(bowtie);
  check_b(bowtie, b.coloring, 5);
  CHECK(b.report.verified);

  Graph u = disjoint_union(named("cycle", {4}), named("cycle", {5}));
  AutoResult r = color_auto(u);
  check_b(u, r.coloring, 4);
  CHECK(r.report.colors_used == 4);

  AutoResult k6 = color_auto(named("k6-minus-pm"));
  CHECK(k6.report.colors_used == 12);
  CHECK(k6.report.verified);

  CHECK(code_of([] { color_auto(named("complete", {13})); }) == ErrorCode::kUnsupported);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = testing::gnp(10, 0.15 + 0.03 * (seed % 6), seed);
    AutoResult a = color_auto(g);
    CHECK(verify_bcoloring(g, a.coloring).ok());
    CHECK(a.report.verified);
    if (a.report.bound && !a.report.fallback) CHECK(a.report.colors_used <= *a.report.bound);
  }
}

TEST_CASE("an isolated vertex never changes the palette") {
  for (const Graph& g : {named("icosahedron"), named("grid", {3, 4}), named("cube"),
                         named("fan", {5}), named("cycle", {7})}) {
    Graph h = with_isolated(g);
    CHECK(color_planar(g).palette_size() == color_planar(h).palette_size());
    CHECK(proper_edge_color(g).palette_size() == proper_edge_color(h).palette_size());
    CHECK(color_auto(g).report.colors_used == color_auto(h).report.colors_used);
    if (bipartite(g)) {
      CHECK(color_bipartite_planar(g).palette_size() ==
            color_bipartite_planar(h).palette_size());
    }
    if (g.max_degree() <= 3) {
      CHECK(color_subcubic(g).palette_size() == color_subcubic(h).palette_size());
    }
  }
}

TEST_CASE("theoretical bounds by class") {
  CHECK(theoretical_bound(named("icosahedron"), GraphClass::kPlanar) == 18);
  CHECK(theoretical_bound(named("grid", {3, 3}), GraphClass::kBipartitePlanar) == 8);
  CHECK(theoretical_bound(named("cube"), GraphClass::kSubcubicPlanar) == 6);
  CHECK(theoretical_bound(named("cycle", {4}), GraphClass::kOuterplanar) == 4);
  CHECK(theoretical_bound(named("complete-minus-edge", {4}), GraphClass::kOuterplanar) == 5);
  CHECK(theoretical_bound(named("fan", {4}), GraphClass::kOuterplanar) == 5);
  CHECK_FALSE(theoretical_bound(named("complete", {5}), GraphClass::kNonplanar).has_value());
}
