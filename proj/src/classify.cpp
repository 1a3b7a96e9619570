#include <string>

#include "rainbow4/recognition.hpp"

namespace rainbow4 {

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kOuterplanar: return "outerplanar";
    case GraphClass::kSubcubicPlanar: return "subcubic-planar";
    case GraphClass::kBipartitePlanar: return "bipartite-planar";
    case GraphClass::kPlanar: return "planar";
    case GraphClass::kNonplanar: return "nonplanar";
  }
  return "unknown";
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
  if (name == "outerplanar") return GraphClass::kOuterplanar;
  if (name == "subcubic" || name == "subcubic-planar") {
    return GraphClass::kSubcubicPlanar;
  }
  if (name == "bipartite-planar") return GraphClass::kBipartitePlanar;
  if (name == "planar") return GraphClass::kPlanar;
  if (name == "nonplanar") return GraphClass::kNonplanar;
  return std::nullopt;
}

bool satisfies_class(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::kOuterplanar: return is_outerplanar(g);
    case GraphClass::kSubcubicPlanar:
      return g.max_degree() <= 3 && is_planar(g);
    case GraphClass::kBipartitePlanar: return bipartite(g) && is_planar(g);
    case GraphClass::kPlanar: return is_planar(g);
    case GraphClass::kNonplanar: return !is_planar(g);
  }
  return false;
}

ClassLabel classify(const Graph& g, std::optional<std::string_view> declared) {
  ClassLabel out{GraphClass::kPlanar, std::nullopt, std::nullopt};
  PlanarityResult pr = planarity(g);
  if (!pr.planar) {
    out.label = GraphClass::kNonplanar;
    out.obstruction = pr.witness;
  } else if (is_outerplanar(g)) {
    out.label = GraphClass::kOuterplanar;
    if (is_two_connected(g)) out.layout = outer_cycle(g);
  } else if (g.max_degree() <= 3) {
    out.label = GraphClass::kSubcubicPlanar;
  } else if (bipartite(g)) {
    out.label = GraphClass::kBipartitePlanar;
  }

  if (declared) {
    auto want = parse_graph_class(*declared);
    if (!want) {
      throw Error(ErrorCode::kFormat,
                  "unknown class '" + std::string(*declared) + "'");
    }
    if (!satisfies_class(g, *want)) {
      throw Error(ErrorCode::kDirectiveContradiction,
                  "declared class '" + std::string(*declared) +
                      "' does not hold; graph is " +
                      std::string(to_string(out.label)));
    }
    out.label = *want;
  }
  return out;
}

}  // namespace rainbow4
