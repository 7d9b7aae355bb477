#include "divsol/brute_force.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

namespace divsol {

namespace {

struct SearchArc {
  int head;
  Length length;
  int edge_id;
};

std::vector<PathResult> dfs_paths(int n, int source, int sink,
                                  const std::vector<std::vector<SearchArc>>& adj,
                                  std::size_t limit) {
  std::vector<PathResult> paths;
  std::vector<char> visited(n, 0);
  PathResult current;
  current.vertices.push_back(source);
  std::function<void(int)> walk = [&](int v) {
    if (v == sink) {
      if (paths.size() >= limit) {
        throw std::invalid_argument("path enumeration budget exceeded");
      }
      paths.push_back(current);
      return;
    }
    visited[v] = 1;
    for (const SearchArc& arc : adj[v]) {
      if (visited[arc.head]) continue;
      current.vertices.push_back(arc.head);
      current.edges.push_back(arc.edge_id);
      current.length += arc.length;
      walk(arc.head);
      current.vertices.pop_back();
      current.edges.pop_back();
      current.length -= arc.length;
    }
    visited[v] = 0;
  };
  walk(source);
  return paths;
}

std::vector<std::vector<SearchArc>> sorted_adjacency(
    int n, const std::vector<SearchArc>& arcs,
    const std::vector<int>& tails) {
  std::vector<std::vector<SearchArc>> adj(n);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    adj[tails[i]].push_back(arcs[i]);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(), [](const SearchArc& x,
                                           const SearchArc& y) {
      return std::tie(x.head, x.edge_id) < std::tie(y.head, y.edge_id);
    });
  }
  return adj;
}

std::vector<PathResult> keep_shortest(std::vector<PathResult> paths) {
  if (paths.empty()) return paths;
  Length best = std::numeric_limits<Length>::max();
  for (const PathResult& p : paths) best = std::min(best, p.length);
  std::vector<PathResult> shortest;
  for (PathResult& p : paths) {
    if (p.length == best) shortest.push_back(std::move(p));
  }
  return shortest;
}

// Maximizes diversity over all k-multisets of the candidate sets.
SolutionSet best_k_multiset(const std::vector<ElementSet>& candidates, int k,
                            std::span<const Weight> weights) {
  if (candidates.empty()) {
    throw InfeasibleError("no feasible solutions to choose from");
  }
  std::vector<int> pick(k, 0);
  std::vector<int> best_pick;
  std::int64_t best_value = std::numeric_limits<std::int64_t>::min();
  std::vector<ElementSet> chosen(k);
  std::function<void(int, int)> recurse = [&](int position, int start) {
    if (position == k) {
      for (int i = 0; i < k; ++i) chosen[i] = candidates[pick[i]];
      const std::int64_t value = diversity_pairwise(chosen, weights);
      if (value > best_value) {
        best_value = value;
        best_pick = pick;
      }
      return;
    }
    for (int c = start; c < static_cast<int>(candidates.size()); ++c) {
      pick[position] = c;
      recurse(position + 1, c);
    }
  };
  recurse(0, 0);
  std::vector<ElementSet> best_sets;
  best_sets.reserve(k);
  for (int i : best_pick) best_sets.push_back(candidates[i]);
  return make_solution_set(std::move(best_sets), weights);
}

ElementSet sorted_edge_set(const PathResult& path) {
  ElementSet edges = path.edges;
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

std::vector<PathResult> all_simple_st_paths(const DirectedGraph& g, int source,
                                            int sink, std::size_t limit) {
  validate(g);
  std::vector<SearchArc> arcs;
  std::vector<int> tails;
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    arcs.push_back({g.arcs[i].head, g.arcs[i].length, static_cast<int>(i)});
    tails.push_back(g.arcs[i].tail);
  }
  return dfs_paths(g.n, source, sink, sorted_adjacency(g.n, arcs, tails),
                   limit);
}

std::vector<PathResult> all_simple_st_paths(const UndirectedGraph& g,
                                            int source, int sink,
                                            std::size_t limit) {
  validate(g);
  std::vector<SearchArc> arcs;
  std::vector<int> tails;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    arcs.push_back({e.v, e.length, static_cast<int>(i)});
    tails.push_back(e.u);
    arcs.push_back({e.u, e.length, static_cast<int>(i)});
    tails.push_back(e.v);
  }
  return dfs_paths(g.n, source, sink, sorted_adjacency(g.n, arcs, tails),
                   limit);
}

std::vector<PathResult> enumerate_shortest_paths(const DirectedGraph& g,
                                                 int source, int sink,
                                                 std::size_t limit) {
  return keep_shortest(all_simple_st_paths(g, source, sink, limit));
}

std::vector<PathResult> enumerate_shortest_paths(const UndirectedGraph& g,
                                                 int source, int sink,
                                                 std::size_t limit) {
  return keep_shortest(all_simple_st_paths(g, source, sink, limit));
}

namespace {

template <typename Graph>
SolutionSet brute_force_paths_impl(const Graph& g, int source, int sink, int k,
                                   std::size_t max_paths,
                                   std::span<const Weight> weights) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (source == sink) {
    return make_solution_set(std::vector<ElementSet>(k), weights);
  }
  // The budget applies to shortest paths; the raw walk gets a generous cap.
  const auto shortest =
      enumerate_shortest_paths(g, source, sink, std::size_t{1} << 20);
  if (shortest.size() > max_paths) {
    throw std::invalid_argument("shortest-path budget exceeded: " +
                                std::to_string(shortest.size()) + " > " +
                                std::to_string(max_paths));
  }
  if (shortest.empty()) {
    throw InfeasibleError("sink unreachable from source");
  }
  std::vector<ElementSet> candidates;
  candidates.reserve(shortest.size());
  for (const PathResult& p : shortest) candidates.push_back(sorted_edge_set(p));
  return best_k_multiset(candidates, k, weights);
}

}  // namespace

SolutionSet brute_force_diverse_paths(const DirectedGraph& g, int source,
                                      int sink, int k, std::size_t max_paths) {
  std::vector<Weight> weights;
  for (const Arc& a : g.arcs) weights.push_back(a.weight);
  return brute_force_paths_impl(g, source, sink, k, max_paths, weights);
}

SolutionSet brute_force_diverse_paths(const UndirectedGraph& g, int source,
                                      int sink, int k, std::size_t max_paths) {
  std::vector<Weight> weights;
  for (const Edge& e : g.edges) weights.push_back(e.weight);
  return brute_force_paths_impl(g, source, sink, k, max_paths, weights);
}

std::vector<ElementSet> enumerate_cardinality_matchings(
    const BipartiteGraph& g, int cardinality) {
  validate(g);
  std::vector<ElementSet> matchings;
  std::vector<char> left_used(g.left_count, 0), right_used(g.right_count, 0);
  ElementSet current;
  std::function<void(int)> recurse = [&](int next_edge) {
    if (static_cast<int>(current.size()) == cardinality) {
      matchings.push_back(current);
      return;
    }
    if (next_edge >= static_cast<int>(g.edges.size())) return;
    // Prune: not enough edges left to finish.
    if (static_cast<int>(g.edges.size()) - next_edge <
        cardinality - static_cast<int>(current.size())) {
      return;
    }
    const BipartiteEdge& e = g.edges[next_edge];
    if (!left_used[e.a] && !right_used[e.b]) {
      left_used[e.a] = right_used[e.b] = 1;
      current.push_back(next_edge);
      recurse(next_edge + 1);
      current.pop_back();
      left_used[e.a] = right_used[e.b] = 0;
    }
    recurse(next_edge + 1);
  };
  recurse(0);
  return matchings;
}

SolutionSet brute_force_diverse_matchings(const BipartiteGraph& g, int k,
                                          int cardinality) {
  if (k < 1 || cardinality < 1) {
    throw std::invalid_argument("k and cardinality must be positive");
  }
  std::vector<Weight> weights;
  for (const BipartiteEdge& e : g.edges) weights.push_back(e.weight);
  const auto matchings = enumerate_cardinality_matchings(g, cardinality);
  if (matchings.empty()) {
    throw InfeasibleError("no matching of the requested cardinality");
  }
  return best_k_multiset(matchings, k, weights);
}

std::vector<ElementSet> enumerate_bases(const IndependenceOracle& matroid) {
  const int n = matroid.ground_size();
  const int rank = matroid.rank();
  std::vector<ElementSet> bases;
  ElementSet current;
  std::function<void(int)> recurse = [&](int next) {
    if (static_cast<int>(current.size()) == rank) {
      if (matroid.is_independent(current)) bases.push_back(current);
      return;
    }
    if (n - next < rank - static_cast<int>(current.size())) return;
    current.push_back(next);
    recurse(next + 1);
    current.pop_back();
    recurse(next + 1);
  };
  recurse(0);
  return bases;
}

SolutionSet brute_force_diverse_bases(const IndependenceOracle& matroid,
                                      std::span<const Weight> weights, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const auto bases = enumerate_bases(matroid);
  if (bases.empty()) throw InfeasibleError("matroid has no base");
  return best_k_multiset(bases, k, weights);
}

std::int64_t brute_force_min_cost_flow(const FlowNetwork& net,
                                       std::int64_t requirement) {
  const std::size_t m = net.arcs.size();
  std::vector<std::int64_t> flow(m, 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  bool feasible = false;
  std::function<void(std::size_t)> recurse = [&](std::size_t arc) {
    if (arc == m) {
      std::vector<std::int64_t> balance(net.n, 0);
      std::int64_t cost = 0;
      for (std::size_t i = 0; i < m; ++i) {
        balance[net.arcs[i].tail] += flow[i];
        balance[net.arcs[i].head] -= flow[i];
        cost += net.arcs[i].cost * flow[i];
      }
      if (balance[net.source] != requirement) return;
      for (int v = 0; v < net.n; ++v) {
        if (v != net.source && v != net.sink && balance[v] != 0) return;
      }
      feasible = true;
      best = std::min(best, cost);
      return;
    }
    for (std::int64_t f = 0; f <= net.arcs[arc].capacity; ++f) {
      flow[arc] = f;
      recurse(arc + 1);
    }
    flow[arc] = 0;
  };
  recurse(0);
  if (!feasible) {
    throw InfeasibleError("no integral flow meets the requirement");
  }
  return best;
}

}  // namespace divsol
