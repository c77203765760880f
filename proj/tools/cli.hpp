#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fatlas/fatlas.hpp"

namespace fatlas::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Coloring load_coloring(const std::string& path) { return parse_coloring(read_file(path)); }

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  require(static_cast<bool>(file), ErrorCode::ParseError, "cannot write '" + path + "'");
  file << text;
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      require(used == tok.size(), ErrorCode::ParseError, "bad integer '" + tok + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "bad integer '" + tok + "'");
    }
  }
  return out;
}

/// Input that could not be read or understood, as opposed to input that fails a check.
inline bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::LoopEdge:
    case ErrorCode::OutOfRange:
    case ErrorCode::InvalidColoring:
      return true;
    default:
      return false;
  }
}

/// CLI11 short options are single characters; accept -g1 / -c1 / -g2 as long ones.
inline std::vector<std::string> normalize(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a == "-g1" || a == "-c1" || a == "-g2") a = "-" + a;
  }
  return args;
}

inline std::string to_dot(const Graph& g, const Coloring& c) {
  std::ostringstream os;
  os << "graph G {\n  node [style=filled];\n";
  const int k = c.classes();
  for (Vertex v = 0; v < g.order(); ++v) {
    char hsv[48];
    std::snprintf(hsv, sizeof hsv, "%.3f 0.45 0.95", static_cast<double>(c[v]) / k);
    os << "  " << v << " [label=\"" << v << "\" class=" << c[v] << " fillcolor=\"" << hsv << "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace detail

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics and timings to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"FAT coloring toolkit", "fatlas"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  std::string family;
  int gen_n = 0;
  int gen_t = 0;
  std::string gen_parts;
  std::string gen_out;
  gen->add_option("family", family, "turan | multipartite | cycle | complete")
      ->required()
      ->check(CLI::IsMember({"turan", "multipartite", "cycle", "complete"}));
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--t", gen_t, "Part count (turan)");
  gen->add_option("--parts", gen_parts, "Part sizes, e.g. 6,4,4,2");
  gen->add_option("-o,--output", gen_out, "Output path (default stdout)");

  // validate
  auto* validate = app.add_subcommand("validate", "Check a coloring and print its witness");
  std::string graph_path;
  std::string coloring_path;
  validate->add_option("-g,--graph", graph_path)->required();
  validate->add_option("-c,--coloring", coloring_path)->required();

  // chroma
  auto* chroma = app.add_subcommand("chroma", "FAT chromatic number");
  std::string method = "brute";
  unsigned workers = 1;
  int max_n = 0;
  bool catalog = false;
  std::optional<int> catalog_k;
  chroma->add_option("-g,--graph", graph_path)->required();
  chroma->add_option("--method", method)->check(CLI::IsMember({"brute", "closed"}));
  chroma->add_option("--workers", workers)->check(CLI::Range(1u, 256u));
  chroma->add_option("--max-n", max_n, "Enumeration cap (default 13 or FATLAS_MAX_N)");
  chroma->add_flag("--catalog", catalog, "Emit every FAT coloring as JSON lines");
  chroma->add_option("--k", catalog_k, "Restrict the catalog to k classes");

  // spectrum
  auto* spec_cmd = app.add_subcommand("spectrum", "Normalized Laplacian spectrum");
  double tol = kDefaultSpectrumTol;
  spec_cmd->add_option("-g,--graph", graph_path)->required();
  spec_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);

  // lift
  auto* lift = app.add_subcommand("lift", "Lift a coloring to a graph product");
  std::string kind;
  std::string g1_path;
  std::string c1_path;
  std::string g2_path;
  lift->add_option("--kind", kind)->required()->check(CLI::IsMember({"tensor", "cartesian", "strong"}));
  lift->add_option("--g1", g1_path)->required();
  lift->add_option("--c1", c1_path)->required();
  lift->add_option("--g2", g2_path)->required();

  // complement
  auto* comp = app.add_subcommand("complement", "Carry a coloring to the complement");
  comp->add_option("-g,--graph", graph_path)->required();
  comp->add_option("-c,--coloring", coloring_path)->required();

  // remove
  auto* remove = app.add_subcommand("remove", "Delete coloring classes");
  std::string classes;
  remove->add_option("-g,--graph", graph_path)->required();
  remove->add_option("-c,--coloring", coloring_path)->required();
  remove->add_option("--classes", classes, "Class ids, e.g. 1,3")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  std::string suite;
  std::uint64_t seed = 1;
  int trials = 20;
  std::vector<std::string> suite_names(kSuiteNames.begin(), kSuiteNames.end());
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names));
  verify->add_option("--seed", seed);
  verify->add_option("--trials", trials)->check(CLI::NonNegativeNumber);

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Write a DOT file with one fill color per class");
  std::string dot_out;
  dot->add_option("-g,--graph", graph_path)->required();
  dot->add_option("-c,--coloring", coloring_path)->required();
  dot->add_option("-o,--output", dot_out);

  args = detail::normalize(std::move(args));
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      Graph g;
      if (family == "turan") {
        g = turan(gen_n, gen_t);
      } else if (family == "multipartite") {
        require(!gen_parts.empty(), ErrorCode::ParseError, "--parts is required");
        g = complete_multipartite(MultipartiteSpec::parse(gen_parts));
      } else if (family == "cycle") {
        g = cycle(gen_n);
      } else {
        g = complete(gen_n);
      }
      detail::write_output(gen_out, to_edge_list(g), out);
      return kOk;
    }

    if (*validate) {
      const Graph g = load_edge_list(graph_path);
      const Coloring c = detail::load_coloring(coloring_path);
      const FatVerdict verdict = validate_fat(g, c);
      out << to_json(verdict).dump(2) << "\n";
      return accepted(verdict) ? kOk : kFailure;
    }

    if (*chroma) {
      const Graph g = load_edge_list(graph_path);
      if (method == "closed") {
        const auto recognized = recognize_multipartite(g);
        if (!recognized) {
          err << "error: graph is not complete multipartite\n";
          return kFailure;
        }
        ChromaticVerdict verdict = fat_chromatic_multipartite(recognized->spec);
        std::vector<int> assignment(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) {
          assignment[static_cast<std::size_t>(v)] = verdict.construction[recognized->to_layout[static_cast<std::size_t>(v)]];
        }
        verdict.construction = Coloring(std::move(assignment), verdict.construction.classes());
        out << to_json(verdict).dump(2) << "\n";
        return kOk;
      }
      SearchOptions opts = SearchOptions::from_env();
      if (max_n > 0) opts.max_n = max_n;
      opts.workers = workers;
      const auto start = std::chrono::steady_clock::now();
      if (catalog) {
        for (const auto& entry : all_fat_colorings(g, catalog_k, opts)) out << to_json(entry).dump() << "\n";
      } else {
        out << to_json(search_parallel(g, workers, opts)).dump(2) << "\n";
      }
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      err << "elapsed: " << elapsed.count() << " s\n";
      return kOk;
    }

    if (*spec_cmd) {
      out << to_json(spectrum(load_edge_list(graph_path), tol)).dump(2) << "\n";
      return kOk;
    }

    auto witness_or_fail = [&](const Graph& g, const Coloring& c) -> std::optional<FatWitness> {
      const FatVerdict verdict = validate_fat(g, c);
      if (const FatWitness* w = witness_of(verdict)) return *w;
      err << "error: coloring is not FAT: " << std::get<Rejection>(verdict).reason << "\n";
      return std::nullopt;
    };

    if (*lift) {
      const Graph g1 = load_edge_list(g1_path);
      const Coloring c1 = detail::load_coloring(c1_path);
      const Graph g2 = load_edge_list(g2_path);
      const auto w = witness_or_fail(g1, c1);
      if (!w) return kFailure;
      const ProductKind pk = kind == "tensor" ? ProductKind::Tensor
                             : kind == "cartesian" ? ProductKind::Cartesian
                                                   : ProductKind::Strong;
      out << to_json(product_lift(g1, c1, *w, g2, pk)).dump(2) << "\n";
      return kOk;
    }

    if (*comp || *remove) {
      const Graph g = load_edge_list(graph_path);
      const Coloring c = detail::load_coloring(coloring_path);
      const auto w = witness_or_fail(g, c);
      if (!w) return kFailure;
      const LiftResult r =
          *comp ? complement_lift(g, c, *w) : remove_classes(g, c, *w, ClassIndexSet(detail::parse_int_list(classes)));
      out << to_json(r).dump(2) << "\n";
      return kOk;
    }

    if (*verify) {
      const SuiteReport report = run_suite(suite, seed, trials);
      out << report.suite << ": " << (report.ok() ? "PASS" : "FAIL") << " (" << report.passed << " checks passed, "
          << report.failed << " failed, " << report.skipped << " skipped)\n";
      for (const auto& f : report.failures) out << "  failed: " << f << "\n";
      return report.ok() ? kOk : kFailure;
    }

    if (*dot) {
      const Graph g = load_edge_list(graph_path);
      const Coloring c = detail::load_coloring(coloring_path);
      require(c.size() == g.order(), ErrorCode::InvalidColoring, "coloring length differs from vertex count");
      detail::write_output(dot_out, detail::to_dot(g, c), out);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return detail::is_input_error(e.code()) ? kUsage : kFailure;
  }
  return kUsage;
}

}  // namespace fatlas::cli
