#include "divsol/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <utility>

#include "divsol/diverse_paths.hpp"
#include "divsol/diversity.hpp"
#include "divsol/io.hpp"
#include "divsol/shortest_dag.hpp"
#include "divsol/yen.hpp"

namespace divsol {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::vector<Weight> weights_of(const DirectedGraph& g) {
  std::vector<Weight> w;
  for (const Arc& a : g.arcs) w.push_back(a.weight);
  return w;
}

std::vector<Weight> weights_of(const UndirectedGraph& g) {
  std::vector<Weight> w;
  for (const Edge& e : g.edges) w.push_back(e.weight);
  return w;
}

double average_length(std::span<const PathResult> paths) {
  if (paths.empty()) return 0;
  double total = 0;
  for (const PathResult& p : paths) total += static_cast<double>(p.length);
  return total / static_cast<double>(paths.size());
}

std::int64_t kbest_diversity(std::span<const PathResult> paths,
                             std::span<const Weight> weights) {
  std::vector<ElementSet> sets;
  sets.reserve(paths.size());
  for (const PathResult& p : paths) {
    ElementSet edges = p.edges;
    std::sort(edges.begin(), edges.end());
    sets.push_back(std::move(edges));
  }
  return diversity_pairwise(sets, weights);
}

// One (ours, kbest) row pair for a single instance.
Length length_of(const DirectedGraph& g, int edge) {
  return g.arcs[edge].length;
}

Length length_of(const UndirectedGraph& g, int edge) {
  return g.edges[edge].length;
}

template <typename Graph>
void run_instance(const Graph& g, int source, int sink, int k,
                  const std::string& instance, const std::string& p_or_file,
                  const BenchConfig& config, std::vector<BenchRow>& rows,
                  std::ostream* log) {
  const auto weights = weights_of(g);

  const auto ours_start = Clock::now();
  const DiversePathsResult ours = diverse_shortest_paths(g, source, sink, k);
  const double ours_ms = ms_since(ours_start);
  double ours_avg = 0;
  for (const auto& edge_set : ours.solutions.sets) {
    for (int edge : edge_set) {
      ours_avg += static_cast<double>(length_of(g, edge));
    }
  }
  ours_avg = ours.paths.empty() ? 0 : ours_avg / ours.paths.size();
  rows.push_back({instance, p_or_file, k, "ours", ours.solutions.diversity,
                  config.zero_timings ? 0 : ours_ms,
                  static_cast<int>(ours.paths.size()), ours_avg});
  if (config.verbose && log) {
    *log << instance << " p_or_file=" << p_or_file << " k=" << k
         << " phases prune=" << ours.timings.prune_ms
         << "ms flow=" << ours.timings.flow_ms
         << "ms decode=" << ours.timings.decode_ms << "ms\n";
  }

  const auto kbest_start = Clock::now();
  const std::vector<PathResult> kbest = yen_k_shortest(g, source, sink, k);
  const double kbest_ms = ms_since(kbest_start);
  rows.push_back({instance, p_or_file, k, "kbest",
                  kbest_diversity(kbest, weights),
                  config.zero_timings ? 0 : kbest_ms,
                  static_cast<int>(kbest.size()), average_length(kbest)});
}

DirectedGraph load_file(const std::string& path, const BenchConfig& config) {
  std::string format = config.file_format;
  if (format == "auto") {
    format = path.size() >= 3 && path.substr(path.size() - 3) == ".gr"
                 ? "dimacs"
                 : "snap";
  }
  const std::string text = read_file_or_stdin(path);
  if (format == "dimacs") {
    return parse_dimacs_gr(text, DimacsOptions{config.round100, false});
  }
  if (format == "snap") return parse_snap_edgelist(text);
  throw std::invalid_argument("unknown file format: " + format);
}

void run_file(const std::string& path, const BenchConfig& config,
              std::vector<BenchRow>& rows, std::ostream* log) {
  const DirectedGraph g = load_file(path, config);
  const std::string name = std::filesystem::path(path).filename().string();
  if (g.n < 2) throw std::invalid_argument("file graph too small: " + path);

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> pick(0, g.n - 1);
  int accepted = 0;
  long long attempts = 0;
  const long long max_attempts =
      static_cast<long long>(config.pairs_per_file) * 1000 + 1000;
  while (accepted < config.pairs_per_file && attempts < max_attempts) {
    ++attempts;
    const int source = pick(rng);
    const int sink = pick(rng);
    if (source == sink) continue;
    ShortestPathDag dag;
    try {
      dag = build_shortest_path_dag(g, source, sink);
    } catch (const InfeasibleError&) {
      continue;
    }
    // Admission filters: at least 3 hops, and 3k shortest paths per k.
    if (min_hop_length(dag) < 3) continue;
    const std::uint64_t path_count = count_st_paths(dag);
    const std::string instance = name + "#" + std::to_string(accepted);
    for (int k : config.k_values) {
      if (path_count < static_cast<std::uint64_t>(3) * k) {
        rows.push_back({instance, name, k, "skipped", 0, 0, 0, 0});
        continue;
      }
      run_instance(g, source, sink, k, instance, name, config, rows, log);
    }
    ++accepted;
  }
  if (log && accepted < config.pairs_per_file) {
    *log << "warning: only " << accepted << " of " << config.pairs_per_file
         << " source-sink pairs qualified in " << name << "\n";
  }
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchConfig& config,
                                    std::ostream* log) {
  if (config.k_values.empty()) {
    throw std::invalid_argument("benchmark needs at least one k");
  }
  for (int k : config.k_values) {
    if (k < 1) throw std::invalid_argument("k must be positive");
  }
  std::vector<BenchRow> rows;
  for (int side : config.grid_sides) {
    const GridInstance grid = generate_grid(side);
    for (int k : config.k_values) {
      run_instance(grid.graph, grid.source, grid.sink, k, "grid",
                   std::to_string(side), config, rows, log);
    }
  }
  for (const std::string& file : config.files) {
    run_file(file, config, rows, log);
  }
  return rows;
}

void write_csv(std::span<const BenchRow> rows, std::ostream& out) {
  out << "instance,p_or_file,k,algo,diversity,time_ms,paths,avg_len\n";
  char buffer[64];
  for (const BenchRow& row : rows) {
    out << row.instance << ',' << row.p_or_file << ',' << row.k << ','
        << row.algo << ',' << row.diversity << ',';
    std::snprintf(buffer, sizeof(buffer), "%.3f", row.time_ms);
    out << buffer << ',' << row.paths << ',';
    std::snprintf(buffer, sizeof(buffer), "%.2f", row.avg_len);
    out << buffer << '\n';
  }
}

void write_plot_series(std::span<const BenchRow> rows, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::map<std::string, std::vector<std::pair<int, double>>> series;
  for (const BenchRow& row : rows) {
    if (row.instance != "grid" || row.algo == "skipped") continue;
    const int side = std::stoi(row.p_or_file);
    const std::string suffix = row.algo + "_k" + std::to_string(row.k);
    series["time_" + suffix].push_back({side, row.time_ms});
    series["diversity_" + suffix].push_back(
        {side, static_cast<double>(row.diversity)});
  }
  for (auto& [name, points] : series) {
    std::sort(points.begin(), points.end());
    std::ofstream out(dir + "/" + name + ".dat");
    if (!out) throw std::runtime_error("cannot write plot file in " + dir);
    char buffer[64];
    for (const auto& [side, value] : points) {
      std::snprintf(buffer, sizeof(buffer), "%d %.3f", side, value);
      out << buffer << '\n';
    }
  }
}

}  // namespace divsol
