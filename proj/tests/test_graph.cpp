#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rainbow4/graph.hpp"
#include "rainbow4/graph_io.hpp"

using namespace rainbow4;
using testing::make;
using testing::named;

namespace {

std::set<std::array<Vertex, 4>> as_tuples(const std::vector<FourCycle>& cs) {
  std::set<std::array<Vertex, 4>> out;
  for (const FourCycle& c : cs) out.insert(c.vertices);
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

TEST_CASE("graph construction rejects loops, parallels and bad ends") {
  Graph g(3);
  CHECK(g.add_edge(0, 1) == 0);
  CHECK(code_of([&] { g.add_edge(1, 1); }) == ErrorCode::kInvalidGraph);
  CHECK(code_of([&] { g.add_edge(1, 0); }) == ErrorCode::kInvalidGraph);
  CHECK(code_of([&] { g.add_edge(0, 3); }) == ErrorCode::kInvalidGraph);
  CHECK(code_of([&] { g.edge(5); }) == ErrorCode::kUnknownEdge);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(2) == 0);
}

TEST_CASE("adjacency index agrees with the edge list") {
  Graph g = testing::gnp(9, 0.5, 7);
  int total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    total += g.degree(v);
    for (EdgeId e : g.incident(v)) CHECK(g.edge(e).touches(v));
  }
  CHECK(total == 2 * g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    CHECK(g.find_edge(g.edge(e).v, g.edge(e).u) == e);
  }
}

TEST_CASE("enumerate_c4 examples") {
  CHECK(enumerate_c4(named("cycle", {5})).empty());
  CHECK(enumerate_c4(named("complete", {4})).size() == 3);
  CHECK(enumerate_c4(named("complete-bipartite", {2, 3})).size() == 3);
  auto c4 = enumerate_c4(named("cycle", {4}));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].vertices == std::array<Vertex, 4>{0, 1, 2, 3});
}

TEST_CASE("enumerate_c4 agrees with the quadruple-loop oracle") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Graph g = testing::gnp(4 + static_cast<int>(seed % 6), 0.2 + 0.1 * (seed % 7), seed);
    auto cycles = enumerate_c4(g);
    CHECK(std::is_sorted(cycles.begin(), cycles.end()));
    CHECK(as_tuples(cycles).size() == cycles.size());
    CHECK(as_tuples(cycles) == oracle::c4_tuples(g));
    for (const FourCycle& c : cycles) {
      for (int i = 0; i < 4; ++i) {
        const Edge& e = g.edge(c.edges[i]);
        CHECK(e.touches(c.vertices[i]));
        CHECK(e.touches(c.vertices[(i + 1) % 4]));
      }
    }
  }
}

TEST_CASE("c4_through_edge examples and subset property") {
  CHECK(c4_through_edge(named("cycle", {4}), 2).size() == 1);
  CHECK(c4_through_edge(named("complete", {4}), 0).size() == 2);
  CHECK(c4_through_edge(named("cycle", {6}), 3).empty());
  CHECK_THROWS_AS(c4_through_edge(named("cycle", {6}), 6), Error);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = testing::gnp(8, 0.45, seed);
    auto all = enumerate_c4(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      std::set<std::array<Vertex, 4>> want;
      for (const FourCycle& c : all)
        if (c.contains(e)) want.insert(c.vertices);
      CHECK(as_tuples(c4_through_edge(g, e)) == want);
    }
  }
}

TEST_CASE("blocks examples") {
  Graph bowtie = make(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK(blocks(bowtie).size() == 2);
  CHECK(cut_vertices(bowtie) == std::vector<Vertex>{2});
  CHECK(blocks(named("cycle", {6})).size() == 1);
  auto p4 = blocks(named("path", {4}));
  CHECK(p4.size() == 3);
  for (const Block& b : p4) CHECK(b.is_bridge());
}

TEST_CASE("blocks partition the edges and meet at cut vertices") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = testing::gnp(10, 0.18 + 0.02 * (seed % 5), seed);
    auto bs = blocks(g);
    std::vector<int> hits(g.num_edges(), 0);
    std::vector<int> per_vertex(g.num_vertices(), 0);
    for (const Block& b : bs) {
      CHECK((b.is_bridge() || is_two_connected(b.sub.graph)));
      for (EdgeId e : b.sub.edge_to_parent) ++hits[e];
      for (Vertex v : b.sub.vertex_to_parent) ++per_vertex[v];
    }
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    auto cuts = cut_vertices(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      bool is_cut = std::find(cuts.begin(), cuts.end(), v) != cuts.end();
      if (g.degree(v) == 0) {
        CHECK(per_vertex[v] == 0);
      } else if (!is_cut) {
        CHECK(per_vertex[v] == 1);
      } else {
        // A cut vertex lies in one block per branch it separates.
        Subgraph rest = remove_vertices(g, std::vector<Vertex>{v});
        int before = 0, after = 0;
        connected_components(g, &before);
        connected_components(rest.graph, &after);
        CHECK(per_vertex[v] == after - before + 1);
      }
    }
  }
}

TEST_CASE("is_bipartite examples and witnesses") {
  auto c6 = is_bipartite(named("cycle", {6}));
  REQUIRE(std::holds_alternative<Bipartition>(c6));
  auto side = std::get<Bipartition>(c6).side;
  for (int i = 0; i < 6; ++i) CHECK(side[i] != side[(i + 1) % 6]);

  auto c5 = is_bipartite(named("cycle", {5}));
  REQUIRE(std::holds_alternative<OddCycle>(c5));
  CHECK(std::get<OddCycle>(c5).walk.size() == 5);

  auto k23 = is_bipartite(named("complete-bipartite", {2, 3}));
  REQUIRE(std::holds_alternative<Bipartition>(k23));
  auto s = std::get<Bipartition>(k23).side;
  int ones = static_cast<int>(std::count(s.begin(), s.end(), 1));
  CHECK(std::min(ones, 5 - ones) == 2);

  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Graph g = testing::gnp(9, 0.25, seed);
    auto r = is_bipartite(g);
    if (auto* b = std::get_if<Bipartition>(&r)) {
      for (const Edge& e : g.edges()) CHECK(b->side[e.u] != b->side[e.v]);
    } else {
      const auto& w = std::get<OddCycle>(r).walk;
      CHECK(w.size() % 2 == 1);
      for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(g.adjacent(w[i], w[(i + 1) % w.size()]));
      }
    }
  }
}

TEST_CASE("subgraphs keep maps to parent ids") {
  Graph k4 = named("complete", {4});
  Subgraph s = remove_vertices(k4, std::vector<Vertex>{1});
  CHECK(s.graph.num_vertices() == 3);
  CHECK(s.graph.num_edges() == 3);
  for (EdgeId e = 0; e < s.graph.num_edges(); ++e) {
    const Edge& local = s.graph.edge(e);
    const Edge& parent = k4.edge(s.edge_to_parent[e]);
    CHECK(std::set<Vertex>{s.vertex_to_parent[local.u], s.vertex_to_parent[local.v]} ==
          std::set<Vertex>{parent.u, parent.v});
  }
  Subgraph r = remove_edges(k4, std::vector<EdgeId>{0, 5});
  CHECK(r.graph.num_edges() == 4);
  CHECK(r.edge_to_parent == std::vector<EdgeId>{1, 2, 3, 4});
}

TEST_CASE("edge colorings") {
  EdgeColoring c(4);
  CHECK_FALSE(c.is_total());
  c.assign(0, 7);
  c.assign(1, 3);
  c.assign(2, 7);
  c.assign(3, 10);
  CHECK(c.is_total());
  CHECK(c.palette_size() == 10);
  CHECK(c.distinct_colors() == 3);
  EdgeColoring n = c.normalized();
  CHECK(n.raw() == std::vector<Color>{2, 1, 2, 3});
}

TEST_CASE("graph text format round trip and errors") {
  Graph g = named("fan", {4});
  GraphFile f{g, std::string("outerplanar"), std::vector<Vertex>{0, 1, 2, 3, 4}};
  std::ostringstream os;
  write_graph(os, f);
  std::istringstream is(os.str());
  GraphFile back = parse_graph(is);
  CHECK(back.graph.edges().size() == g.edges().size());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    CHECK(back.graph.edge(e).u == g.edge(e).u);
    CHECK(back.graph.edge(e).v == g.edge(e).v);
  }
  CHECK(back.declared_class == "outerplanar");
  CHECK(back.declared_outer_cycle == std::vector<Vertex>{0, 1, 2, 3, 4});

  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
  };
  CHECK(parse("# comment\n3 2\n0 1\n# another\n1 2\n").graph.num_edges() == 2);
  CHECK(code_of([&] { parse("3 2\n0 1\n"); }) == ErrorCode::kFormat);
  CHECK(code_of([&] { parse("3 1\n0 3\n"); }) == ErrorCode::kFormat);
  CHECK(code_of([&] { parse("3 2\n0 1\n1 0\n"); }) == ErrorCode::kFormat);
  CHECK(code_of([&] { parse("3 1\n0 x\n"); }) == ErrorCode::kFormat);
  CHECK(code_of([&] { parse(""); }) == ErrorCode::kFormat);
}

TEST_CASE("coloring text format") {
  Graph c4 = named("cycle", {4});
  EdgeColoring c(4);
  for (EdgeId e = 0; e < 4; ++e) c.assign(e, e + 1);
  std::ostringstream os;
  write_coloring(os, c4, c, "exact");
  CHECK(os.str().rfind("# colors: 4\n# algorithm: exact\n", 0) == 0);
  std::istringstream is(os.str());
  CHECK(parse_coloring(is, c4) == c);

  std::istringstream twice("0 1 1\n1 0 2\n");
  CHECK(code_of([&] { parse_coloring(twice, c4); }) == ErrorCode::kFormat);
  std::istringstream missing("0 2 1\n");
  CHECK(code_of([&] { parse_coloring(missing, c4); }) == ErrorCode::kFormat);
}
