#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow4/graph.hpp"

namespace rainbow4 {

enum class KuratowskiKind { kK5, kK33 };

// Edge set of a subdivision of K5 or K3,3 inside the tested graph.
struct KuratowskiWitness {
  KuratowskiKind kind;
  std::vector<EdgeId> edges;
};

struct PlanarityResult {
  bool planar = true;
  std::optional<KuratowskiWitness> witness;  // set whenever !planar
};

PlanarityResult planarity(const Graph& g);
inline bool is_planar(const Graph& g) { return planarity(g).planar; }

// Independent check that `edges` form a subdivision of K5 or K3,3: the
// branch vertices are exactly those of degree > 2 in the edge set, and
// suppressing the degree-2 vertices leaves K5 or K3,3.
std::optional<KuratowskiKind> check_kuratowski(const Graph& g,
                                               std::span<const EdgeId> edges);

// Apex reduction: g is outerplanar iff g plus a universal vertex is planar.
bool is_outerplanar(const Graph& g);

struct Chord {
  EdgeId edge;
  int i;  // positions in the outer order, i < j
  int j;
};

// A 2-connected outerplanar graph drawn as a Hamiltonian cycle plus
// pairwise non-crossing chords.
struct OuterplanarLayout {
  std::vector<Vertex> order;
  std::vector<Chord> chords;
};

// Returns an explanation of the first broken invariant, or nullopt.
std::optional<std::string> validate_layout(const Graph& g,
                                           const OuterplanarLayout& layout);

// Builds the layout for a 2-connected outerplanar graph. A declared cycle
// (from a '# outer-cycle' directive) is validated and used verbatim.
// Otherwise the cycle is rotated to start at vertex 0, heading to the smaller
// of its two cycle neighbours.
OuterplanarLayout outer_cycle(
    const Graph& g,
    std::optional<std::span<const Vertex>> declared = std::nullopt);

enum class GraphClass {
  kOuterplanar,
  kSubcubicPlanar,
  kBipartitePlanar,
  kPlanar,
  kNonplanar,
};

std::string_view to_string(GraphClass c);
// Accepts both the label names and the directive spelling "subcubic".
std::optional<GraphClass> parse_graph_class(std::string_view name);

struct ClassLabel {
  GraphClass label;
  std::optional<KuratowskiWitness> obstruction;
  std::optional<OuterplanarLayout> layout;  // 2-connected outerplanar only
};

bool satisfies_class(const Graph& g, GraphClass c);

// Most specific label in the order outerplanar > subcubic-planar >
// bipartite-planar > planar > nonplanar. A declared class is checked and,
// when it holds, returned as-is; otherwise kDirectiveContradiction.
ClassLabel classify(const Graph& g,
                    std::optional<std::string_view> declared = std::nullopt);

}  // namespace rainbow4
