#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "rainbow4/bcolor.hpp"
#include "rainbow4/generators.hpp"

namespace rainbow4 {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const BoundReport& r);

// Names accepted by --algo.
bool is_algorithm(const std::string& name);

// Runs one colorer ("auto", "planar", "bipartite", "subcubic",
// "outerplanar" or "exact"), verifies the result and fills in the report.
// The outerplanar colorer uses `layout` when given, else recovers one.
// The returned coloring is normalized to 1..k.
AutoResult color_with(const Graph& g, const std::string& algorithm,
                      const std::optional<OuterplanarLayout>& layout = {},
                      int cap = kDefaultExactCap);

struct BenchOptions {
  std::string corpus = "planar";
  int count = 20;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string algorithm = "auto";
  int cap = kDefaultExactCap;
};

// Runs a seeded corpus and returns the aggregate report. Instances are
// listed by id whatever the worker count; drop the wallMs fields before
// comparing two runs.
nlohmann::json run_bench(const BenchOptions& options);

// Copy of a report with every wallMs field removed.
nlohmann::json without_timing(nlohmann::json report);

}  // namespace rainbow4
