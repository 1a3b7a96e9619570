#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rainbow4/graph.hpp"
#include "rainbow4/recognition.hpp"

namespace rainbow4 {

// Seeded source built on std::mt19937_64, whose output sequence is fixed by
// the standard. Bounded draws use rejection sampling rather than the
// library distributions, whose algorithms differ between implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  int between(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  double unit();  // [0, 1) with 53 random bits
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; derives per-instance seeds from a corpus seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

// Families and parameters:
//   complete n | complete-bipartite a b | complete-minus-edge n | cycle n |
//   path n | k6-minus-pm | fan k | prism k | grid r c |
//   icosahedron | dodecahedron | cube
// Numbering: complete-bipartite puts the a-side at 0..a-1;
// complete-minus-edge drops (0,1); k6-minus-pm drops (0,1),(2,3),(4,5);
// fan has hub 0 and path 1..k; prism k is cycle(k) x K2 with (i,x) -> 2i+x;
// grid cell (i,j) is i*c+j.
struct FamilySpec {
  std::string family;
  std::vector<int> params;
  std::optional<std::uint64_t> seed;
};

// Throws kInvalidParams on unknown families or out-of-range parameters.
Graph gen_named(const FamilySpec& spec);

// (a,x) -> a*|V(h)| + x.
Graph cartesian_product(const Graph& g, const Graph& h);

struct OuterplanarSample {
  Graph graph;
  OuterplanarLayout layout;
};

// Cycle 0..n-1 plus non-crossing chords from recursive interval splitting;
// each candidate chord is kept with probability chord_prob.
OuterplanarSample random_outerplanar(int n, double chord_prob,
                                     std::uint64_t seed);

struct Triangulation {
  Graph graph;
  std::vector<std::array<Vertex, 3>> faces;  // every face, the outer included
};

// Random insertion into faces followed by n random diagonal flips.
Triangulation random_triangulation(int n, std::uint64_t seed);

// A random triangulation thinned by random edge deletions to target_m.
Graph random_planar(int n, int target_m, std::uint64_t seed);

// Planar dual of a triangulation: a cubic planar graph on its faces.
Graph dual_of(const Triangulation& t);

struct Instance {
  std::string id;
  std::string family;
  Graph graph;
  std::optional<OuterplanarLayout> layout;
  std::uint64_t seed = 0;
};

// Seeded corpora used by the bench harness and the acceptance suite.
std::vector<Instance> planar_corpus(int count, std::uint64_t seed, int max_n = 40);
std::vector<Instance> outerplanar_corpus(int count, std::uint64_t seed,
                                         int max_n = 40);
std::vector<Instance> bipartite_corpus(int count, std::uint64_t seed);
std::vector<Instance> subcubic_corpus(int count, std::uint64_t seed,
                                      int max_n = 30);
// Random graphs with at most max_m edges, planar and nonplanar.
std::vector<Instance> mixed_corpus(int count, std::uint64_t seed, int max_m = 18);

// Looks up one of the corpora above by name; throws kInvalidParams.
std::vector<Instance> corpus_by_name(const std::string& name, int count,
                                     std::uint64_t seed);

}  // namespace rainbow4
