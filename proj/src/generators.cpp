#include "rainbow4/generators.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>

namespace rainbow4 {

std::uint64_t Rng::below(std::uint64_t n) {
  // Reject the top sliver so that every residue is equally likely.
  const std::uint64_t rem = (0 - n) % n;
  std::uint64_t r = engine_();
  while (rem != 0 && r >= 0 - rem) r = engine_();
  return r % n;
}

double Rng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidParams, what);
}

int param(const FamilySpec& spec, std::size_t i, const char* name) {
  need(spec.params.size() > i,
       spec.family + ": missing parameter " + std::string(name));
  return spec.params[i];
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph without(const Graph& g, std::initializer_list<std::pair<Vertex, Vertex>> drop) {
  std::vector<EdgeId> doomed;
  for (const auto& [u, v] : drop) doomed.push_back(*g.find_edge(u, v));
  return remove_edges(g, doomed).graph;
}

Graph icosahedron() {
  Graph g(12);
  for (int i = 1; i <= 5; ++i) g.add_edge(0, i);
  for (int i = 1; i <= 5; ++i) g.add_edge(i, i % 5 + 1);
  for (int i = 1; i <= 5; ++i) {
    g.add_edge(i, 5 + i);
    g.add_edge(i, 5 + i % 5 + 1);
  }
  for (int i = 6; i <= 10; ++i) g.add_edge(i, (i - 5) % 5 + 6);
  for (int i = 6; i <= 10; ++i) g.add_edge(i, 11);
  return g;
}

// Generalized Petersen graph GP(10,2).
Graph dodecahedron() {
  Graph g(20);
  for (int i = 0; i < 10; ++i) g.add_edge(i, (i + 1) % 10);
  for (int i = 0; i < 10; ++i) g.add_edge(i, 10 + i);
  for (int i = 0; i < 10; ++i) g.add_edge(10 + i, 10 + (i + 2) % 10);
  return g;
}

Graph cube() {
  Graph g(8);
  for (int v = 0; v < 8; ++v) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if (!(v & bit)) g.add_edge(v, v | bit);
    }
  }
  return g;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph out(g.num_vertices());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

std::vector<Vertex> random_perm(int n, Rng& rng) {
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  return perm;
}

// Deletes `count` uniformly chosen edges.
Graph thin(const Graph& g, int count, Rng& rng) {
  std::vector<EdgeId> ids(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) ids[e] = e;
  rng.shuffle(ids);
  ids.resize(std::min<std::size_t>(ids.size(), std::max(count, 0)));
  return remove_edges(g, ids).graph;
}

std::string make_id(const std::string& corpus, int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", i);
  return corpus + "-" + buf;
}

}  // namespace

Graph gen_named(const FamilySpec& spec) {
  const std::string& f = spec.family;
  if (f == "complete") {
    int n = param(spec, 0, "n");
    need(n >= 1, "complete: n >= 1");
    return complete(n);
  }
  if (f == "complete-bipartite") {
    int a = param(spec, 0, "a");
    int b = param(spec, 1, "b");
    need(a >= 1 && b >= 1, "complete-bipartite: a, b >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    }
    return g;
  }
  if (f == "complete-minus-edge") {
    int n = param(spec, 0, "n");
    need(n >= 2, "complete-minus-edge: n >= 2");
    return without(complete(n), {{0, 1}});
  }
  if (f == "cycle") {
    int n = param(spec, 0, "n");
    need(n >= 3, "cycle: n >= 3");
    return cycle(n);
  }
  if (f == "path") {
    int n = param(spec, 0, "n");
    need(n >= 1, "path: n >= 1");
    return path(n);
  }
  if (f == "k6-minus-pm") {
    return without(complete(6), {{0, 1}, {2, 3}, {4, 5}});
  }
  if (f == "fan") {
    int k = param(spec, 0, "k");
    need(k >= 1, "fan: k >= 1");
    Graph g(k + 1);
    for (int i = 1; i <= k; ++i) g.add_edge(0, i);
    for (int i = 1; i < k; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (f == "prism") {
    int k = param(spec, 0, "k");
    need(k >= 3, "prism: k >= 3");
    return cartesian_product(cycle(k), path(2));
  }
  if (f == "grid") {
    int r = param(spec, 0, "r");
    int c = param(spec, 1, "c");
    need(r >= 1 && c >= 1, "grid: r, c >= 1");
    Graph g(r * c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) {
        if (j + 1 < c) g.add_edge(i * c + j, i * c + j + 1);
        if (i + 1 < r) g.add_edge(i * c + j, (i + 1) * c + j);
      }
    }
    return g;
  }
  if (f == "icosahedron") return icosahedron();
  if (f == "dodecahedron") return dodecahedron();
  if (f == "cube") return cube();
  throw Error(ErrorCode::kInvalidParams, "unknown family '" + f + "'");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int nh = h.num_vertices();
  Graph out(g.num_vertices() * nh);
  for (const Edge& e : g.edges()) {
    for (int x = 0; x < nh; ++x) out.add_edge(e.u * nh + x, e.v * nh + x);
  }
  for (int a = 0; a < g.num_vertices(); ++a) {
    for (const Edge& e : h.edges()) out.add_edge(a * nh + e.u, a * nh + e.v);
  }
  return out;
}

OuterplanarSample random_outerplanar(int n, double chord_prob,
                                     std::uint64_t seed) {
  need(n >= 3, "random_outerplanar: n >= 3");
  need(chord_prob >= 0.0 && chord_prob <= 1.0,
       "random_outerplanar: chord probability in [0, 1]");
  Rng rng(seed);
  Graph g = cycle(n);
  // Split the polygon interval [i, j] at a random apex; the two new sides
  // become chords with probability chord_prob.
  std::vector<std::pair<int, int>> todo{{0, n - 1}};
  while (!todo.empty()) {
    auto [i, j] = todo.back();
    todo.pop_back();
    if (j - i < 2) continue;
    int k = rng.between(i + 1, j - 1);
    for (auto [a, b] : {std::pair{i, k}, std::pair{k, j}}) {
      if (b - a >= 2 && rng.chance(chord_prob)) g.add_edge(a, b);
      todo.push_back({a, b});
    }
  }
  OuterplanarSample out{g, {}};
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  out.layout = outer_cycle(out.graph, std::span<const Vertex>(order));
  return out;
}

Triangulation random_triangulation(int n, std::uint64_t seed) {
  need(n >= 3, "random_triangulation: n >= 3");
  Rng rng(seed);
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  std::set<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {0, 2}};
  auto key = [](Vertex a, Vertex b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  for (Vertex v = 3; v < n; ++v) {
    std::size_t f = rng.below(faces.size());
    auto [a, b, c] = faces[f];
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
    for (Vertex x : {a, b, c}) edges.insert(key(x, v));
  }
  // Flips spread the degrees; faces are oriented, so the face across a->b
  // is the one holding b->a.
  if (n >= 5) {
    for (int step = 0; step < n; ++step) {
      std::size_t f1 = rng.below(faces.size());
      int side = static_cast<int>(rng.below(3));
      Vertex a = faces[f1][side], b = faces[f1][(side + 1) % 3];
      Vertex c = faces[f1][(side + 2) % 3];
      std::size_t f2 = faces.size();
      Vertex d = -1;
      for (std::size_t f = 0; f < faces.size(); ++f) {
        for (int s = 0; s < 3; ++s) {
          if (faces[f][s] == b && faces[f][(s + 1) % 3] == a) {
            f2 = f;
            d = faces[f][(s + 2) % 3];
          }
        }
      }
      if (f2 == faces.size() || c == d || edges.count(key(c, d))) continue;
      edges.erase(key(a, b));
      edges.insert(key(c, d));
      faces[f1] = {a, d, c};
      faces[f2] = {b, c, d};
    }
  }
  Triangulation t;
  t.graph = Graph(n);
  for (const auto& [u, v] : edges) t.graph.add_edge(u, v);
  t.faces = std::move(faces);
  return t;
}

Graph random_planar(int n, int target_m, std::uint64_t seed) {
  need(n >= 3, "random_planar: n >= 3");
  need(target_m >= 0 && target_m <= 3 * n - 6,
       "random_planar: 0 <= target_m <= 3n-6");
  Triangulation t = random_triangulation(n, seed);
  Rng rng(mix_seed(seed, 0xde1e7e));
  return thin(t.graph, t.graph.num_edges() - target_m, rng);
}

Graph dual_of(const Triangulation& t) {
  const int f = static_cast<int>(t.faces.size());
  Graph d(f);
  std::vector<std::pair<int, int>> sides(t.graph.num_edges(), {-1, -1});
  for (int i = 0; i < f; ++i) {
    for (int s = 0; s < 3; ++s) {
      EdgeId e = *t.graph.find_edge(t.faces[i][s], t.faces[i][(s + 1) % 3]);
      (sides[e].first < 0 ? sides[e].first : sides[e].second) = i;
    }
  }
  for (const auto& [a, b] : sides) {
    if (a >= 0 && b >= 0 && !d.adjacent(a, b)) d.add_edge(a, b);
  }
  return d;
}

std::vector<Instance> planar_corpus(int count, std::uint64_t seed, int max_n) {
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = mix_seed(seed, i);
    Rng rng(s);
    int n = rng.between(4, std::max(4, max_n));
    int m = rng.between(n - 1, 3 * n - 6);
    out.push_back({make_id("planar", i), "random-planar",
                   random_planar(n, m, mix_seed(s, 1)), std::nullopt, s});
  }
  return out;
}

std::vector<Instance> outerplanar_corpus(int count, std::uint64_t seed,
                                         int max_n) {
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = mix_seed(seed, i);
    Rng rng(s);
    int n = rng.between(3, std::max(3, max_n));
    double p = i % 3 == 0 ? 1.0 : rng.unit();
    OuterplanarSample sample = random_outerplanar(n, p, mix_seed(s, 1));
    // Scramble the labels so the layout has to be recovered.
    Graph g = relabel(sample.graph, random_perm(n, rng));
    OuterplanarLayout layout = outer_cycle(g);
    out.push_back({make_id("outerplanar", i), "random-outerplanar", g, layout, s});
  }
  return out;
}

std::vector<Instance> bipartite_corpus(int count, std::uint64_t seed) {
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = mix_seed(seed, i);
    Rng rng(s);
    Instance inst{make_id("bipartite", i), "", Graph(), std::nullopt, s};
    switch (i % 4) {
      case 0: {
        int r = rng.between(2, 7), c = rng.between(2, 7);
        inst.family = "grid";
        inst.graph = gen_named({"grid", {r, c}, std::nullopt});
        break;
      }
      case 1: {
        // Subdividing every edge once makes any graph bipartite.
        int n = rng.between(4, 15);
        Graph base = random_planar(n, rng.between(n - 1, 3 * n - 6), mix_seed(s, 1));
        Graph g(n + base.num_edges());
        for (EdgeId e = 0; e < base.num_edges(); ++e) {
          g.add_edge(base.edge(e).u, n + e);
          g.add_edge(n + e, base.edge(e).v);
        }
        inst.family = "subdivision";
        inst.graph = std::move(g);
        break;
      }
      case 2: {
        int n = rng.between(6, 40);
        Graph base = random_planar(n, 3 * n - 6, mix_seed(s, 1));
        std::vector<int> side(n);
        for (int& x : side) x = static_cast<int>(rng.below(2));
        std::vector<EdgeId> doomed;
        for (EdgeId e = 0; e < base.num_edges(); ++e) {
          if (side[base.edge(e).u] == side[base.edge(e).v]) doomed.push_back(e);
        }
        inst.family = "bichromatic-planar";
        inst.graph = remove_edges(base, doomed).graph;
        break;
      }
      default: {
        int d = rng.between(2, 8);
        inst.family = "complete-bipartite";
        inst.graph = gen_named({"complete-bipartite", {2, d}, std::nullopt});
        break;
      }
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Instance> subcubic_corpus(int count, std::uint64_t seed, int max_n) {
  std::vector<Instance> out;
  const int max_faces_n = std::max(4, (max_n + 4) / 2);
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = mix_seed(seed, i);
    Rng rng(s);
    Graph base;
    std::string family;
    switch (i % 4) {
      case 1:
        family = "prism";
        base = gen_named({"prism", {rng.between(3, std::max(3, max_n / 2))}, std::nullopt});
        break;
      case 2:
        family = i % 8 == 2 ? "cube" : "dodecahedron";
        base = gen_named({family, {}, std::nullopt});
        break;
      default:
        family = "triangulation-dual";
        base = dual_of(random_triangulation(rng.between(4, max_faces_n), mix_seed(s, 1)));
        break;
    }
    int deletions = rng.between(0, base.num_edges() / 4);
    Graph g = thin(base, deletions, rng);
    out.push_back({make_id("subcubic", i), family, g, std::nullopt, s});
  }
  return out;
}

std::vector<Instance> mixed_corpus(int count, std::uint64_t seed, int max_m) {
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = mix_seed(seed, i);
    Rng rng(s);
    int n = rng.between(4, 9);
    int m = rng.between(1, std::min(max_m, n * (n - 1) / 2));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    rng.shuffle(pairs);
    pairs.resize(m);
    std::sort(pairs.begin(), pairs.end());
    out.push_back({make_id("mixed", i), "random-gnm",
                   Graph::from_edges(n, pairs), std::nullopt, s});
  }
  return out;
}

std::vector<Instance> corpus_by_name(const std::string& name, int count,
                                     std::uint64_t seed) {
  if (name == "planar") return planar_corpus(count, seed);
  if (name == "outerplanar") return outerplanar_corpus(count, seed);
  if (name == "bipartite") return bipartite_corpus(count, seed);
  if (name == "subcubic") return subcubic_corpus(count, seed);
  if (name == "mixed") return mixed_corpus(count, seed);
  throw Error(ErrorCode::kInvalidParams, "unknown corpus '" + name + "'");
}

}  // namespace rainbow4
