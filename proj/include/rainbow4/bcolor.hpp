#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow4/graph.hpp"
#include "rainbow4/lineplus.hpp"
#include "rainbow4/recognition.hpp"

namespace rainbow4 {

enum class ViolationKind { kAdjacentSameColor, kRepeatedColorOnC4 };
std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::vector<EdgeId> edges;       // the clashing pair, or the cycle's edges
  std::optional<FourCycle> cycle;  // kRepeatedColorOnC4 only
};

struct VerifyReport {
  bool proper = true;
  bool rainbow = true;
  std::vector<Violation> violations;
  int colors_used = 0;

  bool ok() const { return violations.empty(); }
};

// Throws kPartialColoring unless c covers every edge of g.
VerifyReport verify_bcoloring(const Graph& g, const EdgeColoring& c);

// Edges that must differ in color from e: those sharing an endpoint with e
// and those opposite e on some 4-cycle. Sorted, unique.
std::vector<EdgeId> lplus_neighbors(const Graph& g, EdgeId e);

// Colors on the colored L+ neighbours of e. Sorted, unique.
std::vector<Color> forbidden_colors(const Graph& g, const EdgeColoring& partial,
                                    EdgeId e);

struct QbResult {
  int k = 0;
  EdgeColoring coloring;
};

// q_B through the chromatic number of L+(g). Cap applies to m.
QbResult qb_exact(const Graph& g, int cap = kDefaultExactCap);

inline constexpr int kDirectCap = 20;

// q_B by backtracking directly over edge colorings, sharing no code with
// the L+ construction.
QbResult qb_exact_direct(const Graph& g, int cap = kDirectCap);

// Degree-5 elimination colorer; palette within 2*Delta+8.
EdgeColoring color_planar(const Graph& g);

struct MatchingDecomposition {
  std::vector<std::vector<EdgeId>> matchings;
};

// Delta matchings via alternating-path recoloring. Throws kNotBipartite.
MatchingDecomposition konig_edge_coloring(const Graph& g);

// Per-matching conflict graphs F(M_i), recorded for inspection.
struct BipartiteTrace {
  MatchingDecomposition decomposition;
  std::vector<SimpleGraph> fm;  // vertex j of fm[i] is matchings[i][j]
};

// Palette within 2*Delta: matching M_i gets colors 2i-1 and 2i.
EdgeColoring color_bipartite_planar(const Graph& g,
                                    BipartiteTrace* trace = nullptr);

// Misra-Gries: proper, at most Delta+1 colors.
EdgeColoring proper_edge_color(const Graph& g);

// Planar, Delta <= 3; palette within 6.
EdgeColoring color_subcubic(const Graph& g);

// 2-connected outerplanar; palette within Delta+1, except C4 (4) and
// K4-e (5).
EdgeColoring color_outerplanar(const Graph& g, const OuterplanarLayout& layout);

// Class bound for a colorer's output: 2D+8, 2D, 6 or D+1 (with the C4 and
// K4-e blocks raising the outerplanar value). Nonplanar graphs have none.
std::optional<int> theoretical_bound(const Graph& g, GraphClass c);

struct BoundReport {
  std::string id;
  GraphClass label = GraphClass::kPlanar;
  int n = 0;
  int m = 0;
  int max_degree = 0;
  std::string algorithm;
  int colors_used = 0;
  std::optional<int> bound;
  bool verified = false;
  double wall_ms = 0.0;
  std::optional<std::uint64_t> seed;
  bool fallback = false;             // some block needed the exact oracle
  std::vector<std::string> events;   // why each fallback happened
};

struct AutoResult {
  EdgeColoring coloring;
  BoundReport report;
};

// Splits into blocks, colors each with the colorer its class calls for,
// and merges palettes at cut vertices. Falls back to qb_exact on
// kCaseExhaustion or kBoundViolated when m <= cap.
AutoResult color_auto(const Graph& g, int cap = kDefaultExactCap);

}  // namespace rainbow4
