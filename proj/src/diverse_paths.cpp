#include "divsol/diverse_paths.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <utility>

namespace divsol {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::vector<Weight> arc_weights(const DirectedGraph& g) {
  std::vector<Weight> w;
  w.reserve(g.arcs.size());
  for (const Arc& a : g.arcs) w.push_back(a.weight);
  return w;
}

std::vector<Weight> edge_weights(const UndirectedGraph& g) {
  std::vector<Weight> w;
  w.reserve(g.edges.size());
  for (const Edge& e : g.edges) w.push_back(e.weight);
  return w;
}

DiversePathsResult trivial_same_vertex_result(
    int vertex, int k, std::span<const Weight> ground_weights) {
  DiversePathsResult result;
  result.paths.assign(k, {vertex});
  result.solutions = make_solution_set(
      std::vector<ElementSet>(k), ground_weights);
  result.packing_weight = 0;
  return result;
}

#ifndef NDEBUG
// An optimal flow picks copies 1..m per positively weighted edge; the
// packing-weight decode relies on that.
void assert_consecutive_copies(const ExpandedNetwork& expanded,
                               const IntegralFlow& flow,
                               std::span<const Weight> ground_weights) {
  std::vector<std::vector<int>> chosen(ground_weights.size());
  for (std::size_t i = 0; i < expanded.network.arcs.size(); ++i) {
    if (flow.arc_flow[i] == 1) {
      const ArcTag& tag = expanded.network.arcs[i].tag;
      chosen[tag.element].push_back(tag.copy_index);
    }
  }
  for (std::size_t e = 0; e < chosen.size(); ++e) {
    if (ground_weights[e] <= 0) continue;
    std::sort(chosen[e].begin(), chosen[e].end());
    for (std::size_t i = 0; i < chosen[e].size(); ++i) {
      assert(chosen[e][i] == static_cast<int>(i) + 1 &&
             "optimal flow must use consecutive copies");
    }
  }
}
#endif

}  // namespace

ExpandedNetwork expand_dag(const ShortestPathDag& dag, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  ExpandedNetwork expanded;
  expanded.requirement = k;
  expanded.network.n = dag.n;
  expanded.network.source = dag.source;
  expanded.network.sink = dag.sink;
  expanded.network.arcs.reserve(dag.arcs.size() * static_cast<std::size_t>(k));
  for (const DagArc& arc : dag.arcs) {
    for (int copy = 1; copy <= k; ++copy) {
      expanded.network.arcs.push_back(
          {arc.tail, arc.head, 1, -copy_weight(arc.weight, k, copy),
           ArcTag{arc.origin_edge, copy}});
    }
  }
  return expanded;
}

DiversePathsResult diverse_shortest_paths_on_dag(
    const ShortestPathDag& dag, int k,
    std::span<const Weight> ground_weights) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  validate_weight_bound(ground_weights, k);
  if (dag.source == dag.sink) {
    return trivial_same_vertex_result(dag.source, k, ground_weights);
  }

  DiversePathsResult result;
  const auto flow_start = Clock::now();
  const ExpandedNetwork expanded = expand_dag(dag, k);
  const IntegralFlow flow = min_cost_flow(expanded.network, k);
  result.timings.flow_ms = ms_since(flow_start);

  const auto decode_start = Clock::now();
#ifndef NDEBUG
  assert_consecutive_copies(expanded, flow, ground_weights);
#endif
  const auto copy_paths = decompose_unit_flow_paths(expanded.network, flow, k);
  std::vector<ElementSet> edge_sets;
  edge_sets.reserve(copy_paths.size());
  result.paths.reserve(copy_paths.size());
  for (const std::vector<int>& copy_path : copy_paths) {
    ElementSet edges;
    std::vector<int> vertices{dag.source};
    edges.reserve(copy_path.size());
    for (int arc_id : copy_path) {
      edges.push_back(expanded.network.arcs[arc_id].tag.element);
      vertices.push_back(expanded.network.arcs[arc_id].head);
    }
    edge_sets.push_back(std::move(edges));
    result.paths.push_back(std::move(vertices));
  }
  result.solutions = make_solution_set(std::move(edge_sets), ground_weights);
  result.packing_weight = -flow.cost;
  result.timings.decode_ms = ms_since(decode_start);

  // The packing weight of the chosen copies must equal the pairwise
  // diversity of the decoded paths, exactly.
  if (result.packing_weight != result.solutions.diversity) {
    throw std::logic_error("packing weight disagrees with decoded diversity");
  }
  return result;
}

DiversePathsResult diverse_shortest_paths(const DirectedGraph& g, int source,
                                          int sink, int k) {
  const auto prune_start = Clock::now();
  if (source == sink) {
    const auto w = arc_weights(g);
    validate_weight_bound(w, k);
    return trivial_same_vertex_result(source, k, w);
  }
  const ShortestPathDag dag = build_shortest_path_dag(g, source, sink);
  const double prune_ms = ms_since(prune_start);
  DiversePathsResult result =
      diverse_shortest_paths_on_dag(dag, k, arc_weights(g));
  result.timings.prune_ms = prune_ms;
  return result;
}

DiversePathsResult diverse_shortest_paths(const UndirectedGraph& g, int source,
                                          int sink, int k) {
  const auto prune_start = Clock::now();
  if (source == sink) {
    const auto w = edge_weights(g);
    validate_weight_bound(w, k);
    return trivial_same_vertex_result(source, k, w);
  }
  const ShortestPathDag dag = orient_undirected(g, source, sink);
  const double prune_ms = ms_since(prune_start);
  DiversePathsResult result =
      diverse_shortest_paths_on_dag(dag, k, edge_weights(g));
  result.timings.prune_ms = prune_ms;
  return result;
}

}  // namespace divsol
