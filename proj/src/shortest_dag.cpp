#include "divsol/shortest_dag.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace divsol {

namespace {

struct OutArc {
  int head;
  Length length;
};

// Binary heap with lazy deletion; (dist, vertex) ordering keeps the result
// deterministic.
DistanceLabels dijkstra_adjacency(int n, int source,
                                  const std::vector<std::vector<OutArc>>& adj) {
  if (source < 0 || source >= n) {
    throw std::invalid_argument("source vertex out of range: " +
                                std::to_string(source));
  }
  DistanceLabels labels;
  labels.dist.assign(n, DistanceLabels::kUnreachable);
  labels.dist[source] = 0;
  using Item = std::pair<Dist, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.push({0, source});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d != labels.dist[u]) continue;
    for (const OutArc& arc : adj[u]) {
      const Dist candidate = d + arc.length;
      if (candidate < labels.dist[arc.head]) {
        labels.dist[arc.head] = candidate;
        heap.push({candidate, arc.head});
      }
    }
  }
  return labels;
}

}  // namespace

DistanceLabels dijkstra(const DirectedGraph& g, int source) {
  validate(g);
  std::vector<std::vector<OutArc>> adj(g.n);
  for (const Arc& a : g.arcs) adj[a.tail].push_back({a.head, a.length});
  return dijkstra_adjacency(g.n, source, adj);
}

DistanceLabels dijkstra(const UndirectedGraph& g, int source) {
  validate(g);
  std::vector<std::vector<OutArc>> adj(g.n);
  for (const Edge& e : g.edges) {
    adj[e.u].push_back({e.v, e.length});
    adj[e.v].push_back({e.u, e.length});
  }
  return dijkstra_adjacency(g.n, source, adj);
}

namespace {

// Keeps only vertices reachable from the source and reaching the sink, then
// drops arcs with a discarded endpoint and builds the out-adjacency.
ShortestPathDag finish_dag(int n, int source, int sink, DistanceLabels labels,
                           std::vector<DagArc> tight_arcs) {
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (std::size_t i = 0; i < tight_arcs.size(); ++i) {
    fwd[tight_arcs[i].tail].push_back(static_cast<int>(i));
    bwd[tight_arcs[i].head].push_back(static_cast<int>(i));
  }
  const auto reach = [&](int start, const std::vector<std::vector<int>>& adj,
                         bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int arc_id : adj[u]) {
        const int next =
            forward ? tight_arcs[arc_id].head : tight_arcs[arc_id].tail;
        if (!seen[next]) {
          seen[next] = 1;
          stack.push_back(next);
        }
      }
    }
    return seen;
  };
  const std::vector<char> from_source = reach(source, fwd, true);
  const std::vector<char> to_sink = reach(sink, bwd, false);

  ShortestPathDag dag;
  dag.n = n;
  dag.source = source;
  dag.sink = sink;
  dag.labels = std::move(labels);
  dag.vertex_kept.assign(n, 0);
  for (int v = 0; v < n; ++v) dag.vertex_kept[v] = from_source[v] && to_sink[v];
  dag.out.assign(n, {});
  for (const DagArc& arc : tight_arcs) {
    if (dag.vertex_kept[arc.tail] && dag.vertex_kept[arc.head]) {
      dag.out[arc.tail].push_back(static_cast<int>(dag.arcs.size()));
      dag.arcs.push_back(arc);
    }
  }
  return dag;
}

}  // namespace

ShortestPathDag build_shortest_path_dag(const DirectedGraph& g, int source,
                                        int sink) {
  DistanceLabels labels = dijkstra(g, source);
  if (sink < 0 || sink >= g.n) {
    throw std::invalid_argument("sink vertex out of range");
  }
  if (!labels.reachable(sink)) {
    throw InfeasibleError("sink unreachable from source");
  }
  std::vector<DagArc> tight;
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const Arc& a = g.arcs[i];
    if (labels.reachable(a.tail) &&
        labels.dist[a.tail] + a.length == labels.dist[a.head]) {
      tight.push_back(
          {a.tail, a.head, a.length, a.weight, static_cast<int>(i)});
    }
  }
  return finish_dag(g.n, source, sink, std::move(labels), std::move(tight));
}

ShortestPathDag orient_undirected(const UndirectedGraph& g, int source,
                                  int sink) {
  DistanceLabels labels = dijkstra(g, source);
  if (sink < 0 || sink >= g.n) {
    throw std::invalid_argument("sink vertex out of range");
  }
  if (!labels.reachable(sink)) {
    throw InfeasibleError("sink unreachable from source");
  }
  std::vector<DagArc> tight;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (!labels.reachable(e.u) || !labels.reachable(e.v)) continue;
    if (labels.dist[e.u] + e.length == labels.dist[e.v]) {
      tight.push_back({e.u, e.v, e.length, e.weight, static_cast<int>(i)});
    } else if (labels.dist[e.v] + e.length == labels.dist[e.u]) {
      tight.push_back({e.v, e.u, e.length, e.weight, static_cast<int>(i)});
    }
  }
  return finish_dag(g.n, source, sink, std::move(labels), std::move(tight));
}

std::vector<int> topological_order(const ShortestPathDag& dag) {
  std::vector<int> indegree(dag.n, 0);
  for (const DagArc& arc : dag.arcs) ++indegree[arc.head];
  std::vector<int> order;
  order.reserve(dag.n);
  for (int v = 0; v < dag.n; ++v) {
    if (dag.vertex_kept[v] && indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int arc_id : dag.out[order[i]]) {
      if (--indegree[dag.arcs[arc_id].head] == 0) {
        order.push_back(dag.arcs[arc_id].head);
      }
    }
  }
  std::size_t kept = 0;
  for (int v = 0; v < dag.n; ++v) kept += dag.vertex_kept[v] ? 1 : 0;
  if (order.size() != kept) {
    throw std::logic_error("shortest-path graph contains a cycle");
  }
  return order;
}

std::uint64_t count_st_paths(const ShortestPathDag& dag) {
  constexpr std::uint64_t kCap = std::numeric_limits<std::int64_t>::max();
  std::vector<std::uint64_t> count(dag.n, 0);
  count[dag.source] = 1;
  for (int v : topological_order(dag)) {
    if (count[v] == 0) continue;
    for (int arc_id : dag.out[v]) {
      const int head = dag.arcs[arc_id].head;
      count[head] =
          count[v] > kCap - count[head] ? kCap : count[head] + count[v];
    }
  }
  return count[dag.sink];
}

int min_hop_length(const ShortestPathDag& dag) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> hops(dag.n, kInf);
  hops[dag.source] = 0;
  for (int v : topological_order(dag)) {
    if (hops[v] == kInf) continue;
    for (int arc_id : dag.out[v]) {
      const int head = dag.arcs[arc_id].head;
      hops[head] = std::min(hops[head], hops[v] + 1);
    }
  }
  return hops[dag.sink];
}

}  // namespace divsol
