#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "divsol/diversity.hpp"
#include "divsol/graph.hpp"
#include "divsol/min_cost_flow.hpp"

namespace divsol {

struct BipartiteEdge {
  int a = 0;  // left-side vertex
  int b = 0;  // right-side vertex
  Weight weight = 0;
};

struct BipartiteGraph {
  int left_count = 0;
  int right_count = 0;
  std::vector<BipartiteEdge> edges;
};

void validate(const BipartiteGraph& g);

// Text format: header `b <|A|> <|B|> <m>`, then `e <a> <b> <w>` lines with
// 0-based per-side indices; `#` comments allowed. Throws ParseError.
BipartiteGraph parse_bipartite_edgelist(std::string_view text);

// The flow reduction: source -> A (capacity k, cost 0), k unit-capacity
// copies per edge a -> b with cost -w*(e_i), B -> sink (capacity k, cost 0).
// Solve at requirement k*p.
FlowNetwork build_matching_network(const BipartiteGraph& g, int k,
                                   int cardinality);

struct EdgeInstance {
  int edge = 0;  // original edge id
  int a = 0;
  int b = 0;
};

// A multigraph selection with multiplicities spelled out as parallel
// instances; the pipelines guarantee exactly k*p instances of degree <= k.
struct DegreeBoundedSubgraph {
  int left_count = 0;
  int right_count = 0;
  std::vector<EdgeInstance> edges;
};

// Proper edge coloring with colors 1..k by iterative insertion with
// alternating-path recoloring; every color is used at least once whenever the
// subgraph has >= k edges (an unused color is free everywhere, so the lowest
// eligible edge moves to it). Throws std::invalid_argument when some vertex
// degree exceeds k.
std::vector<int> bipartite_edge_color(const DegreeBoundedSubgraph& subgraph,
                                      int k);

// Evens out k matchings partitioning a k*p-edge set to cardinality exactly p
// by shifting one edge at a time along an alternating path between the
// currently largest and smallest classes; the union is preserved. Matchings
// are lists of instance indices into the subgraph.
std::vector<std::vector<int>> rebalance_matchings(
    std::vector<std::vector<int>> matchings, int cardinality,
    const DegreeBoundedSubgraph& subgraph);

struct DiverseMatchingsResult {
  SolutionSet solutions;  // edge-id sets, one matching per set
  std::int64_t packing_weight = 0;
};

// k matchings of cardinality exactly p maximizing the pairwise weighted
// Hamming diversity. Throws InfeasibleError when no k*p flow exists.
DiverseMatchingsResult diverse_bipartite_matchings(const BipartiteGraph& g,
                                                   int k, int cardinality);

}  // namespace divsol
