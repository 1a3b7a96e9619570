#include "rainbow4/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "rainbow4/bench.hpp"
#include "rainbow4/graph_io.hpp"

namespace rainbow4 {
namespace {

struct Loaded {
  Graph graph;
  ClassLabel label;
  std::optional<OuterplanarLayout> layout;
};

// Reads a graph file and checks its directives.
Loaded load(const std::string& path) {
  GraphFile file = read_graph_file(path);
  Loaded out{file.graph, classify(file.graph, file.declared_class), std::nullopt};
  if (file.declared_outer_cycle) {
    out.layout = outer_cycle(out.graph, std::span<const Vertex>(*file.declared_outer_cycle));
  } else {
    out.layout = out.label.layout;
  }
  return out;
}

// Writes to `path`, or to `fallback` when the path is empty.
template <class F>
void emit(const std::string& path, std::ostream& fallback, F&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::kFormat, "cannot write '" + path + "'");
  write(f);
}

std::string directive_name(GraphClass c) {
  return c == GraphClass::kSubcubicPlanar ? "subcubic" : std::string(to_string(c));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"B-colorings of planar and outerplanar graphs", "rainbow4"};
  app.require_subcommand(1);
  const int env_cap = exact_cap_from_env();

  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 1;
  double chord_prob = 0.5;
  std::string out_path;
  auto* gen = app.add_subcommand("generate", "Write a named or random graph");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", params, "Integer parameters");
  gen->add_option("--seed", seed, "Seed for random families");
  gen->add_option("--chord-prob", chord_prob, "Chord probability (random-outerplanar)")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out", out_path, "Output file (default stdout)");

  std::string graph_path;
  std::string coloring_path;
  std::string algo = "auto";
  std::string report_path;
  int cap = env_cap;
  auto* color = app.add_subcommand("color", "Color a graph and verify the result");
  color->add_option("graph", graph_path)->required();
  color->add_option("--algo", algo, "auto|planar|bipartite|subcubic|outerplanar|exact")
      ->check(CLI::IsMember({"auto", "planar", "bipartite", "subcubic",
                             "outerplanar", "exact"}));
  color->add_option("--out", out_path, "Coloring file (default stdout)");
  color->add_option("--report", report_path, "JSON report file");
  color->add_option("--cap", cap, "Exact-oracle edge cap")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check a coloring");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("coloring", coloring_path)->required();

  bool direct = false;
  auto* exact = app.add_subcommand("exact", "Print q_B and a witness coloring");
  exact->add_option("graph", graph_path)->required();
  exact->add_option("--cap", cap, "Edge cap")->check(CLI::PositiveNumber);
  exact->add_flag("--direct", direct, "Search edge colorings directly");

  auto* omega = app.add_subcommand("omega", "Print the clique numbers of F and L+");
  omega->add_option("graph", graph_path)->required();
  omega->add_option("--cap", cap, "Edge cap")->check(CLI::PositiveNumber);

  BenchOptions bench_opts;
  bench_opts.cap = env_cap;
  auto* bench = app.add_subcommand("bench", "Run a seeded corpus");
  bench->add_option("--corpus", bench_opts.corpus, "planar|outerplanar|bipartite|subcubic|mixed")
      ->check(CLI::IsMember({"planar", "outerplanar", "bipartite", "subcubic", "mixed"}));
  bench->add_option("--count", bench_opts.count)->check(CLI::NonNegativeNumber);
  bench->add_option("--seed", bench_opts.seed);
  bench->add_option("--jobs", bench_opts.jobs)->check(CLI::PositiveNumber);
  bench->add_option("--algo", bench_opts.algorithm)
      ->check(CLI::IsMember({"auto", "planar", "bipartite", "subcubic",
                             "outerplanar", "exact"}));
  bench->add_option("--cap", bench_opts.cap)->check(CLI::PositiveNumber);
  bench->add_option("--out", out_path, "Report file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      GraphFile file;
      if (family == "random-planar") {
        if (params.size() != 2) {
          throw Error(ErrorCode::kInvalidParams, "random-planar takes n m");
        }
        file.graph = random_planar(params[0], params[1], seed);
      } else if (family == "random-outerplanar") {
        if (params.size() != 1) {
          throw Error(ErrorCode::kInvalidParams, "random-outerplanar takes n");
        }
        file.graph = random_outerplanar(params[0], chord_prob, seed).graph;
      } else {
        file.graph = gen_named({family, params, seed});
      }
      ClassLabel label = classify(file.graph);
      if (label.label != GraphClass::kNonplanar) {
        file.declared_class = directive_name(label.label);
      }
      if (label.layout) file.declared_outer_cycle = label.layout->order;
      emit(out_path, out, [&](std::ostream& o) { write_graph(o, file); });
      return kExitOk;
    }

    if (*color) {
      Loaded in = load(graph_path);
      AutoResult res = color_with(in.graph, algo, in.layout, cap);
      res.report.id = graph_path;
      emit(out_path, out, [&](std::ostream& o) {
        write_coloring(o, in.graph, res.coloring, res.report.algorithm);
      });
      if (!report_path.empty()) {
        nlohmann::json j = to_json(res.report);
        j["schemaVersion"] = kReportSchemaVersion;
        emit(report_path, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
      }
      if (!out_path.empty()) {
        out << "colors " << res.report.colors_used << " bound "
            << (res.report.bound ? std::to_string(*res.report.bound) : "none")
            << (res.report.verified ? " verified" : " FAILED") << '\n';
      }
      return res.report.verified ? kExitOk : kExitVerifyFailed;
    }

    if (*verify) {
      Loaded in = load(graph_path);
      EdgeColoring c = read_coloring_file(coloring_path, in.graph);
      VerifyReport r = verify_bcoloring(in.graph, c);
      out << to_json(r).dump(2) << '\n';
      return r.ok() ? kExitOk : kExitVerifyFailed;
    }

    if (*exact) {
      Loaded in = load(graph_path);
      QbResult r = direct ? qb_exact_direct(in.graph, std::min(cap, kDirectCap))
                          : qb_exact(in.graph, cap);
      out << r.k << '\n';
      write_coloring(out, in.graph, r.coloring, direct ? "exact-direct" : "exact");
      return kExitOk;
    }

    if (*omega) {
      Loaded in = load(graph_path);
      out << "omega-F " << omega_f(in.graph, cap) << '\n';
      out << "omega-L+ " << omega_line_plus(in.graph, cap) << '\n';
      return kExitOk;
    }

    if (*bench) {
      nlohmann::json report = run_bench(bench_opts);
      emit(out_path, out, [&](std::ostream& o) { o << report.dump(2) << '\n'; });
      const auto& s = report["summary"];
      return s["verified"] == s["instances"] ? kExitOk : kExitVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rainbow4
