#pragma once

#include <cstdint>
#include <vector>

#include "divsol/diversity.hpp"
#include "divsol/graph.hpp"
#include "divsol/min_cost_flow.hpp"
#include "divsol/shortest_dag.hpp"

namespace divsol {

// The pruned DAG with every arc replaced by k unit-capacity copies, copy i
// carrying cost -w(e)*(k - 2i + 1). Arc tags record (origin edge, copy index);
// the flow requirement to solve at is k.
struct ExpandedNetwork {
  FlowNetwork network;
  std::int64_t requirement = 0;
};

ExpandedNetwork expand_dag(const ShortestPathDag& dag, int k);

struct PhaseTimings {
  double prune_ms = 0;
  double flow_ms = 0;
  double decode_ms = 0;
};

struct DiversePathsResult {
  std::vector<std::vector<int>> paths;  // vertex sequences, source to sink
  SolutionSet solutions;                // edge-id sets over the input graph
  std::int64_t packing_weight = 0;      // equals solutions.diversity
  PhaseTimings timings;
};

// k shortest source-sink paths maximizing the pairwise weighted Hamming
// diversity. Paths may repeat (k=1 trivially returns one path, diversity 0);
// when fewer distinct shortest paths exist than k the optimum reuses routes
// and the diversity measure discounts them.
DiversePathsResult diverse_shortest_paths(const DirectedGraph& g, int source,
                                          int sink, int k);
DiversePathsResult diverse_shortest_paths(const UndirectedGraph& g, int source,
                                          int sink, int k);

// Shared tail of both overloads: expand, solve, decompose, decode, score.
DiversePathsResult diverse_shortest_paths_on_dag(
    const ShortestPathDag& dag, int k, std::span<const Weight> ground_weights);

}  // namespace divsol
