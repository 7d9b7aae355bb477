#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "divsol/graph.hpp"

namespace divsol {

using Dist = std::int64_t;

struct DistanceLabels {
  static constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

  std::vector<Dist> dist;

  bool reachable(int v) const { return dist[v] != kUnreachable; }
};

// Exact single-source distances; lengths must be >= 1.
DistanceLabels dijkstra(const DirectedGraph& g, int source);
DistanceLabels dijkstra(const UndirectedGraph& g, int source);

struct DagArc {
  int tail = 0;
  int head = 0;
  Length length = 1;
  Weight weight = 0;
  int origin_edge = -1;  // arc/edge id in the input graph
};

// The pruned graph whose s-t paths are exactly the shortest s-t paths of the
// input: only arcs tight for the distance labels survive, and every kept
// vertex is reachable from the source and reaches the sink. Acyclic because
// dist strictly increases along every kept arc.
struct ShortestPathDag {
  int n = 0;  // vertex ids are shared with the input graph
  int source = 0;
  int sink = 0;
  DistanceLabels labels;
  std::vector<DagArc> arcs;
  std::vector<char> vertex_kept;
  std::vector<std::vector<int>> out;  // arc ids by tail, ascending

  Dist shortest_distance() const { return labels.dist[sink]; }
};

// Throws InfeasibleError when the sink is unreachable.
ShortestPathDag build_shortest_path_dag(const DirectedGraph& g, int source,
                                        int sink);

// Undirected variant: each edge is oriented in the distance-increasing
// direction or dropped; lengths >= 1 guarantee no edge points both ways.
ShortestPathDag orient_undirected(const UndirectedGraph& g, int source,
                                  int sink);

// Vertex order with all arcs forward; throws std::logic_error on a cycle.
std::vector<int> topological_order(const ShortestPathDag& dag);

// Number of source-sink paths, saturating at 2^63 - 1.
std::uint64_t count_st_paths(const ShortestPathDag& dag);

// Minimum hop count over the (shortest) source-sink paths of the DAG.
int min_hop_length(const ShortestPathDag& dag);

}  // namespace divsol
