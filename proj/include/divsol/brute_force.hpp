#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "divsol/diverse_matching.hpp"
#include "divsol/diversity.hpp"
#include "divsol/graph.hpp"
#include "divsol/matroid.hpp"
#include "divsol/min_cost_flow.hpp"
#include "divsol/yen.hpp"

// Exhaustive reference implementations. They stay independent of the flow and
// matroid pipelines: everything here enumerates solution families directly
// and evaluates diversity pairwise.

namespace divsol {

// All simple source-sink paths by depth-first search, in lexicographic vertex
// order; throws std::invalid_argument past `limit` paths.
std::vector<PathResult> all_simple_st_paths(const DirectedGraph& g, int source,
                                            int sink, std::size_t limit);
std::vector<PathResult> all_simple_st_paths(const UndirectedGraph& g,
                                            int source, int sink,
                                            std::size_t limit);

// The shortest ones among all simple source-sink paths.
std::vector<PathResult> enumerate_shortest_paths(const DirectedGraph& g,
                                                 int source, int sink,
                                                 std::size_t limit);
std::vector<PathResult> enumerate_shortest_paths(const UndirectedGraph& g,
                                                 int source, int sink,
                                                 std::size_t limit);

// Exact optimum over all k-multisets of shortest source-sink paths.
SolutionSet brute_force_diverse_paths(const DirectedGraph& g, int source,
                                      int sink, int k,
                                      std::size_t max_paths = 50);
SolutionSet brute_force_diverse_paths(const UndirectedGraph& g, int source,
                                      int sink, int k,
                                      std::size_t max_paths = 50);

// All matchings of the exact cardinality, as sorted edge-id sets.
std::vector<ElementSet> enumerate_cardinality_matchings(
    const BipartiteGraph& g, int cardinality);

SolutionSet brute_force_diverse_matchings(const BipartiteGraph& g, int k,
                                          int cardinality);

// All bases of the matroid, as sorted element-id sets.
std::vector<ElementSet> enumerate_bases(const IndependenceOracle& matroid);

SolutionSet brute_force_diverse_bases(const IndependenceOracle& matroid,
                                      std::span<const Weight> weights, int k);

// Minimum cost over every integral flow of the required value, by direct
// product enumeration of per-arc flows. Intended for tiny networks.
std::int64_t brute_force_min_cost_flow(const FlowNetwork& net,
                                       std::int64_t requirement);

}  // namespace divsol
