#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "divsol/graph.hpp"

namespace divsol {

struct DimacsOptions {
  // Replace each parsed length by max(100, round-to-nearest-100), ties
  // (multiples of 50) rounding up.
  bool round_lengths_to_100 = false;
  // Use weight 1 for every arc instead of the parsed length.
  bool unit_weights = false;
};

// 9th-DIMACS shortest-path format: `c` comments, one `p sp <n> <m>` line,
// `a <u> <v> <w>` arcs with 1-based ids. Parsed length doubles as the weight
// unless unit_weights is set. Throws ParseError.
DirectedGraph parse_dimacs_gr(std::string_view text,
                              const DimacsOptions& options = {});

// SNAP edge list: `#` comment lines, whitespace-separated `<u> <v>` pairs with
// arbitrary non-negative ids. Ids are densely remapped in first-appearance
// order; every arc gets length = weight = 1; duplicates stay as parallel arcs.
DirectedGraph parse_snap_edgelist(std::string_view text);

// Same grammar read as an undirected graph (self-loops rejected).
UndirectedGraph parse_undirected_edgelist(std::string_view text);

Length round_length_to_100(Length length);

// Canonical JSON schema used by tests:
//   directed   {"n": int, "arcs":  [[u, v, length, weight], ...]}
//   undirected {"n": int, "edges": [[u, v, length, weight], ...]}
void to_json(nlohmann::json& j, const DirectedGraph& g);
void from_json(const nlohmann::json& j, DirectedGraph& g);
void to_json(nlohmann::json& j, const UndirectedGraph& g);
void from_json(const nlohmann::json& j, UndirectedGraph& g);

std::string read_file_or_stdin(const std::string& path);  // "-" reads stdin

}  // namespace divsol
