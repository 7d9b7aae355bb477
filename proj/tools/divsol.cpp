// divsol: diverse shortest paths, spanning trees, and bipartite matchings.
//
// Exit codes: 0 success, 1 parse/validation error, 2 infeasible instance.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divsol/bench.hpp"
#include "divsol/diverse_matching.hpp"
#include "divsol/diverse_paths.hpp"
#include "divsol/diversity.hpp"
#include "divsol/io.hpp"
#include "divsol/matroid.hpp"

namespace {

using nlohmann::json;
using namespace divsol;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

json multiplicities_json(const SolutionSet& solutions) {
  json out = json::array();
  for (std::size_t e = 0; e < solutions.multiplicity.size(); ++e) {
    if (solutions.multiplicity[e] > 0) {
      out.push_back({e, solutions.multiplicity[e]});
    }
  }
  return out;
}

// Report invariant: the diversity field must equal a recomputation from the
// listed solutions, by both formulas.
void verify_report(const SolutionSet& solutions,
                   const std::vector<Weight>& weights) {
  const std::int64_t pairwise = diversity_pairwise(solutions.sets, weights);
  const std::int64_t by_mult = diversity_multiplicity(solutions.sets, weights);
  if (pairwise != solutions.diversity || by_mult != solutions.diversity) {
    throw std::logic_error("report verification failed: recomputed " +
                           std::to_string(pairwise) + "/" +
                           std::to_string(by_mult) + " vs reported " +
                           std::to_string(solutions.diversity));
  }
}

void print_report(const json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << report.at("command").get<std::string>()
            << ": diversity = " << report.at("diversity").get<std::int64_t>()
            << "\n";
  if (report.contains("paths")) {
    int index = 0;
    for (const auto& path : report.at("paths")) {
      std::cout << "  path " << index++ << ":";
      for (const auto& v : path) std::cout << " " << v.get<int>();
      std::cout << "\n";
    }
  } else {
    int index = 0;
    for (const auto& set : report.at("solutions")) {
      std::cout << "  solution " << index++ << ": edges";
      for (const auto& e : set) std::cout << " " << e.get<int>();
      std::cout << "\n";
    }
  }
  std::cout << "  total time: " << report.at("timings_ms").at("total")
            << " ms\n";
}

struct PathsOptions {
  std::string input;
  int grid_side = 0;
  std::string format = "auto";
  int source = -1;
  int sink = -1;
  int k = 1;
  bool round100 = false;
  bool unit_weights = false;
  bool as_json = false;
  bool verify = false;
};

int run_paths(const PathsOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  DiversePathsResult result;
  int n = 0;
  std::size_t edges = 0;
  int source = opt.source;
  int sink = opt.sink;
  std::vector<Weight> weights;

  if (opt.format == "grid" && opt.grid_side <= 0) {
    throw std::invalid_argument("--format grid requires --grid <p>");
  }
  if (opt.grid_side > 0) {
    const GridInstance grid = generate_grid(opt.grid_side);
    n = grid.graph.n;
    edges = grid.graph.edges.size();
    if (source < 0) source = grid.source;
    if (sink < 0) sink = grid.sink;
    for (const Edge& e : grid.graph.edges) weights.push_back(e.weight);
    result = diverse_shortest_paths(grid.graph, source, sink, opt.k);
  } else {
    std::string format = opt.format;
    if (format == "auto") {
      format = opt.input.size() >= 3 &&
                       opt.input.substr(opt.input.size() - 3) == ".gr"
                   ? "dimacs"
                   : "snap";
    }
    const std::string text = read_file_or_stdin(opt.input);
    DirectedGraph g;
    if (format == "dimacs") {
      g = parse_dimacs_gr(text, DimacsOptions{opt.round100, opt.unit_weights});
    } else if (format == "snap") {
      g = parse_snap_edgelist(text);
    } else {
      throw std::invalid_argument("unknown format: " + format);
    }
    if (source < 0 || sink < 0) {
      throw std::invalid_argument("--s and --t are required for file input");
    }
    n = g.n;
    edges = g.arcs.size();
    for (const Arc& a : g.arcs) weights.push_back(a.weight);
    result = diverse_shortest_paths(g, source, sink, opt.k);
  }
  const double total_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  if (opt.verify) verify_report(result.solutions, weights);

  json report{
      {"command", "diverse-paths"},
      {"n", n},
      {"edges", edges},
      {"s", source},
      {"t", sink},
      {"k", opt.k},
      {"feasible", true},
      {"diversity", result.solutions.diversity},
      {"packing_weight", result.packing_weight},
      {"paths", result.paths},
      {"solutions", result.solutions.sets},
      {"multiplicities", multiplicities_json(result.solutions)},
      {"timings_ms",
       {{"prune", result.timings.prune_ms},
        {"flow", result.timings.flow_ms},
        {"decode", result.timings.decode_ms},
        {"total", total_ms}}},
  };
  print_report(report, opt.as_json);
  return kExitOk;
}

struct MatchingsOptions {
  std::string input;
  int k = 1;
  int cardinality = 1;
  bool as_json = false;
  bool verify = false;
};

int run_matchings(const MatchingsOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const BipartiteGraph g =
      parse_bipartite_edgelist(read_file_or_stdin(opt.input));
  const DiverseMatchingsResult result =
      diverse_bipartite_matchings(g, opt.k, opt.cardinality);
  const double total_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  std::vector<Weight> weights;
  for (const BipartiteEdge& e : g.edges) weights.push_back(e.weight);
  if (opt.verify) verify_report(result.solutions, weights);

  json matchings = json::array();
  for (const ElementSet& matching : result.solutions.sets) {
    json pairs = json::array();
    for (int e : matching) pairs.push_back({g.edges[e].a, g.edges[e].b});
    matchings.push_back(pairs);
  }
  json report{
      {"command", "diverse-matchings"},
      {"left", g.left_count},
      {"right", g.right_count},
      {"edges", g.edges.size()},
      {"k", opt.k},
      {"p", opt.cardinality},
      {"feasible", true},
      {"diversity", result.solutions.diversity},
      {"packing_weight", result.packing_weight},
      {"solutions", result.solutions.sets},
      {"matchings", matchings},
      {"multiplicities", multiplicities_json(result.solutions)},
      {"timings_ms", {{"total", total_ms}}},
  };
  print_report(report, opt.as_json);
  return kExitOk;
}

struct TreesOptions {
  std::string input;
  std::string format = "snap";
  int k = 1;
  bool as_json = false;
  bool verify = false;
};

int run_trees(const TreesOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_file_or_stdin(opt.input);
  UndirectedGraph g;
  if (opt.format == "snap") {
    g = parse_undirected_edgelist(text);
  } else if (opt.format == "json") {
    g = json::parse(text).get<UndirectedGraph>();
  } else {
    throw std::invalid_argument("unknown format: " + opt.format);
  }
  const GraphicMatroid matroid(g);
  std::vector<Weight> weights;
  for (const Edge& e : g.edges) weights.push_back(e.weight);
  const DiverseBasesResult result =
      weighted_diverse_bases(matroid, weights, opt.k);
  const double total_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  if (opt.verify) verify_report(result.solutions, weights);

  json report{
      {"command", "diverse-trees"},
      {"n", g.n},
      {"edges", g.edges.size()},
      {"k", opt.k},
      {"feasible", true},
      {"diversity", result.solutions.diversity},
      {"packing_weight", result.packing_weight},
      {"solutions", result.solutions.sets},
      {"multiplicities", multiplicities_json(result.solutions)},
      {"oracle_queries", result.oracle_queries},
      {"timings_ms", {{"total", total_ms}}},
  };
  print_report(report, opt.as_json);
  return kExitOk;
}

struct BenchOptions {
  std::string grid_range;
  std::string k_list;
  std::vector<std::string> files;
  std::string format = "auto";
  int pairs = 400;
  std::uint64_t seed = 2021;
  bool round100 = false;
  bool no_timing = false;
  bool verbose = false;
  std::string out;
  std::string plot_dir;
};

std::vector<int> parse_grid_range(const std::string& spec) {
  if (spec.empty()) return {};
  int lo = 0, hi = 0, step = 0;
  if (std::sscanf(spec.c_str(), "%d:%d:%d", &lo, &hi, &step) != 3 ||
      step <= 0 || lo < 2 || hi < lo) {
    throw std::invalid_argument("grid range must be <lo>:<hi>:<step>");
  }
  std::vector<int> sides;
  for (int p = lo; p <= hi; p += step) sides.push_back(p);
  return sides;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start < csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) comma = csv.size();
    values.push_back(std::stoi(csv.substr(start, comma - start)));
    start = comma + 1;
  }
  return values;
}

int run_bench(const BenchOptions& opt) {
  BenchConfig config;
  config.grid_sides = parse_grid_range(opt.grid_range);
  config.k_values = parse_int_list(opt.k_list);
  config.files = opt.files;
  config.file_format = opt.format;
  config.round100 = opt.round100;
  config.pairs_per_file = opt.pairs;
  config.seed = opt.seed;
  config.zero_timings = opt.no_timing;
  config.verbose = opt.verbose;

  const auto rows = run_benchmark(config, &std::cerr);
  if (opt.out.empty() || opt.out == "-") {
    write_csv(rows, std::cout);
  } else {
    std::ofstream out(opt.out);
    if (!out) throw std::invalid_argument("cannot write " + opt.out);
    write_csv(rows, out);
  }
  if (!opt.plot_dir.empty()) write_plot_series(rows, opt.plot_dir);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diverse solutions: shortest st-paths, spanning trees, and "
               "fixed-size bipartite matchings maximizing the pairwise "
               "weighted Hamming diversity."};
  app.require_subcommand(1);

  PathsOptions paths;
  CLI::App* cmd_paths = app.add_subcommand(
      "paths", "k shortest st-paths maximizing pairwise diversity");
  cmd_paths->add_option("--input,-i", paths.input,
                        "input graph file, or - for stdin");
  cmd_paths->add_option("--grid", paths.grid_side,
                        "unit grid side p (corner-to-corner instance)");
  cmd_paths->add_option("--format", paths.format,
                        "dimacs|snap|grid|auto (auto: .gr means dimacs)");
  bool as_text = false;
  cmd_paths->add_flag("--text", as_text, "human-readable report (default)");
  cmd_paths->add_option("--s", paths.source, "source vertex (0-based)");
  cmd_paths->add_option("--t", paths.sink, "sink vertex (0-based)");
  cmd_paths->add_option("--k", paths.k, "number of solutions")->required();
  cmd_paths->add_flag("--round100", paths.round100,
                      "round DIMACS lengths to the nearest 100 (floor 100)");
  cmd_paths->add_flag("--unit-weights", paths.unit_weights,
                      "weight every arc 1 instead of its length");
  cmd_paths->add_flag("--json", paths.as_json, "machine-readable report");
  cmd_paths->add_flag("--verify", paths.verify,
                      "recompute diversity from the listed solutions");

  MatchingsOptions matchings;
  CLI::App* cmd_matchings = app.add_subcommand(
      "matchings", "k size-p bipartite matchings maximizing diversity");
  cmd_matchings->add_option("--input,-i", matchings.input, "bipartite file")
      ->required();
  cmd_matchings->add_option("--k", matchings.k, "number of matchings")
      ->required();
  cmd_matchings->add_option("--p", matchings.cardinality,
                            "matching cardinality")
      ->required();
  cmd_matchings->add_flag("--json", matchings.as_json, "JSON report");
  cmd_matchings->add_flag("--verify", matchings.verify, "self-check");

  TreesOptions trees;
  CLI::App* cmd_trees = app.add_subcommand(
      "trees", "k spanning trees maximizing diversity (graphic matroid)");
  cmd_trees->add_option("--input,-i", trees.input, "undirected edge list")
      ->required();
  cmd_trees->add_option("--format", trees.format, "snap|json");
  cmd_trees->add_option("--k", trees.k, "number of trees")->required();
  cmd_trees->add_flag("--json", trees.as_json, "JSON report");
  cmd_trees->add_flag("--verify", trees.verify, "self-check");

  BenchOptions bench;
  CLI::App* cmd_bench = app.add_subcommand(
      "bench", "grid/file benchmark against the k-best baseline, CSV out");
  cmd_bench->add_option("--grid-range", bench.grid_range, "lo:hi:step");
  cmd_bench->add_option("--k-list", bench.k_list, "comma-separated k values")
      ->required();
  cmd_bench->add_option("--files", bench.files, "graph files to sample");
  cmd_bench->add_option("--format", bench.format, "dimacs|snap|auto");
  cmd_bench->add_option("--n", bench.pairs, "st-pairs per file");
  cmd_bench->add_option("--seed", bench.seed, "sampling seed");
  cmd_bench->add_flag("--round100", bench.round100, "DIMACS smoothing");
  cmd_bench->add_flag("--no-timing", bench.no_timing,
                      "zero the time column for byte-stable CSV");
  cmd_bench->add_flag("--verbose", bench.verbose, "phase breakdown to stderr");
  cmd_bench->add_option("--out", bench.out, "CSV file (default stdout)");
  cmd_bench->add_option("--plot-dir", bench.plot_dir,
                        "write two-column plot series here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_paths->parsed()) {
      if ((paths.grid_side > 0) == !paths.input.empty()) {
        throw std::invalid_argument("give exactly one of --input or --grid");
      }
      return run_paths(paths);
    }
    if (cmd_matchings->parsed()) return run_matchings(matchings);
    if (cmd_trees->parsed()) return run_trees(trees);
    if (cmd_bench->parsed()) return run_bench(bench);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
