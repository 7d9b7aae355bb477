#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "divsol/graph.hpp"

namespace divsol {

struct BenchRow {
  std::string instance;   // "grid" or "<file basename>#<pair index>"
  std::string p_or_file;  // grid side or file name
  int k = 0;
  std::string algo;  // "ours" | "kbest" | "skipped"
  std::int64_t diversity = 0;
  double time_ms = 0;
  int paths = 0;
  double avg_len = 0;
};

struct BenchConfig {
  std::vector<int> grid_sides;
  std::vector<int> k_values;
  std::vector<std::string> files;
  std::string file_format = "auto";  // "dimacs" | "snap" | "auto" (extension)
  bool round100 = false;             // DIMACS length smoothing
  int pairs_per_file = 400;
  std::uint64_t seed = 2021;
  bool zero_timings = false;  // write 0 in the time column (byte-stable CSV)
  bool verbose = false;       // per-phase breakdown to the log stream
};

// Grid instances run corner-to-corner once per (p, k); file instances run on
// randomly sampled source-sink pairs, skipping pairs whose shortest path has
// fewer than 3 hops and marking (pair, k) combinations with fewer than 3k
// shortest paths as skipped instead of aborting.
std::vector<BenchRow> run_benchmark(const BenchConfig& config,
                                    std::ostream* log = nullptr);

// Schema: instance,p_or_file,k,algo,diversity,time_ms,paths,avg_len
void write_csv(std::span<const BenchRow> rows, std::ostream& out);

// Two-column (p, value) series per (algo, k) for the grid rows, one file per
// series: <dir>/{time,diversity}_<algo>_k<k>.dat
void write_plot_series(std::span<const BenchRow> rows, const std::string& dir);

}  // namespace divsol
