#include "rainbow4/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace rainbow4 {

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json out;
  out["proper"] = r.proper;
  out["rainbow"] = r.rainbow;
  out["colorsUsed"] = r.colors_used;
  out["violations"] = nlohmann::json::array();
  for (const Violation& v : r.violations) {
    nlohmann::json j;
    j["kind"] = std::string(to_string(v.kind));
    j["edges"] = v.edges;
    if (v.cycle) {
      j["cycle"] = std::vector<Vertex>(v.cycle->vertices.begin(),
                                       v.cycle->vertices.end());
    }
    out["violations"].push_back(std::move(j));
  }
  return out;
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json out;
  out["id"] = r.id;
  out["class"] = std::string(to_string(r.label));
  out["n"] = r.n;
  out["m"] = r.m;
  out["maxDegree"] = r.max_degree;
  out["algorithm"] = r.algorithm;
  out["colorsUsed"] = r.colors_used;
  out["bound"] = r.bound ? nlohmann::json(*r.bound) : nlohmann::json(nullptr);
  out["verified"] = r.verified;
  out["wallMs"] = r.wall_ms;
  out["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  out["fallback"] = r.fallback;
  out["events"] = r.events;
  return out;
}

bool is_algorithm(const std::string& name) {
  return name == "auto" || name == "planar" || name == "bipartite" ||
         name == "subcubic" || name == "outerplanar" || name == "exact";
}

AutoResult color_with(const Graph& g, const std::string& algorithm,
                      const std::optional<OuterplanarLayout>& layout, int cap) {
  if (algorithm == "auto") return color_auto(g, cap);
  if (!is_algorithm(algorithm)) {
    throw Error(ErrorCode::kInvalidParams, "unknown algorithm '" + algorithm + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  AutoResult out;
  BoundReport& r = out.report;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.max_degree = g.max_degree();
  r.algorithm = algorithm;
  r.label = classify(g).label;

  EdgeColoring c;
  if (algorithm == "planar") {
    c = color_planar(g);
    r.bound = theoretical_bound(g, GraphClass::kPlanar);
  } else if (algorithm == "bipartite") {
    c = color_bipartite_planar(g);
    r.bound = theoretical_bound(g, GraphClass::kBipartitePlanar);
  } else if (algorithm == "subcubic") {
    c = color_subcubic(g);
    r.bound = theoretical_bound(g, GraphClass::kSubcubicPlanar);
  } else if (algorithm == "outerplanar") {
    c = color_outerplanar(g, layout ? *layout : outer_cycle(g));
    r.bound = theoretical_bound(g, GraphClass::kOuterplanar);
  } else {
    c = qb_exact(g, cap).coloring;
    r.bound = theoretical_bound(g, r.label);
  }
  out.coloring = c.normalized();
  r.colors_used = out.coloring.palette_size();
  r.verified = verify_bcoloring(g, out.coloring).ok();
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return out;
}

nlohmann::json run_bench(const BenchOptions& o) {
  std::vector<Instance> corpus = corpus_by_name(o.corpus, o.count, o.seed);
  std::vector<nlohmann::json> rows(corpus.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      const Instance& inst = corpus[i];
      nlohmann::json row;
      try {
        AutoResult res = color_with(inst.graph, o.algorithm, inst.layout, o.cap);
        res.report.id = inst.id;
        res.report.seed = inst.seed;
        row = to_json(res.report);
      } catch (const Error& err) {
        BoundReport r;
        r.id = inst.id;
        r.n = inst.graph.num_vertices();
        r.m = inst.graph.num_edges();
        r.max_degree = inst.graph.max_degree();
        r.algorithm = o.algorithm;
        r.seed = inst.seed;
        row = to_json(r);
        row["error"] = err.what();
      }
      row["family"] = inst.family;
      rows[i] = std::move(row);
    }
  };
  const int jobs = std::max(1, o.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a["id"].template get<std::string>() < b["id"].template get<std::string>();
  });

  int verified = 0, within = 0, errors = 0, fallbacks = 0;
  for (const auto& row : rows) {
    if (row.contains("error")) ++errors;
    if (row["verified"].get<bool>()) ++verified;
    if (row["verified"].get<bool>() &&
        (row["bound"].is_null() ||
         row["colorsUsed"].get<int>() <= row["bound"].get<int>())) {
      ++within;
    }
    if (row["fallback"].get<bool>()) ++fallbacks;
  }
  nlohmann::json out;
  out["schemaVersion"] = kReportSchemaVersion;
  out["corpus"] = o.corpus;
  out["count"] = o.count;
  out["seed"] = o.seed;
  out["algorithm"] = o.algorithm;
  out["cap"] = o.cap;
  out["instances"] = rows;
  out["summary"] = {
      {"instances", rows.size()},
      {"verified", verified},
      {"withinBound", within},
      {"errors", errors},
      {"fallbacks", fallbacks},
      {"fallbackRate",
       rows.empty() ? 0.0 : static_cast<double>(fallbacks) / rows.size()},
  };
  return out;
}

nlohmann::json without_timing(nlohmann::json report) {
  if (report.contains("instances")) {
    for (auto& row : report["instances"]) row.erase("wallMs");
  }
  report.erase("wallMs");
  return report;
}

}  // namespace rainbow4
