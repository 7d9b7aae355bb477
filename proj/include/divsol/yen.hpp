#pragma once

#include <vector>

#include "divsol/graph.hpp"

namespace divsol {

struct PathResult {
  std::vector<int> vertices;  // source to sink
  std::vector<int> edges;     // arc/edge ids in the input graph
  Length length = 0;
};

// The k shortest loopless source-sink paths in non-decreasing length order
// (fewer when the graph runs out). Ties break by lexicographic vertex
// sequence, so the output is deterministic. Throws InfeasibleError when the
// sink is unreachable.
std::vector<PathResult> yen_k_shortest(const DirectedGraph& g, int source,
                                       int sink, int k);
std::vector<PathResult> yen_k_shortest(const UndirectedGraph& g, int source,
                                       int sink, int k);

}  // namespace divsol
