#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "divsol/brute_force.hpp"
#include "divsol/graph.hpp"
#include "divsol/shortest_dag.hpp"
#include "random_instances.hpp"

using namespace divsol;

namespace {

DirectedGraph diamond() {
  // s=0, a=1, b=2, t=3; two disjoint unit routes.
  DirectedGraph g;
  g.n = 4;
  g.arcs = {{0, 1, 1, 1}, {1, 3, 1, 1}, {0, 2, 1, 1}, {2, 3, 1, 1}};
  return g;
}

}  // namespace

TEST_CASE("dijkstra basics") {
  SUBCASE("single arc") {
    DirectedGraph g;
    g.n = 2;
    g.arcs = {{0, 1, 7, 7}};
    const DistanceLabels labels = dijkstra(g, 0);
    CHECK(labels.dist[1] == 7);
  }
  SUBCASE("diamond") {
    const DistanceLabels labels = dijkstra(diamond(), 0);
    CHECK(labels.dist[3] == 2);
  }
  SUBCASE("grid corner distance is 2(p-1)") {
    for (int p : {3, 5, 8}) {
      const GridInstance grid = generate_grid(p);
      const DistanceLabels labels = dijkstra(grid.graph, grid.source);
      REQUIRE(labels.dist[grid.sink] == 2 * (p - 1));
    }
  }
  SUBCASE("unreachable vertex") {
    DirectedGraph g;
    g.n = 3;
    g.arcs = {{0, 1, 1, 1}};
    const DistanceLabels labels = dijkstra(g, 0);
    CHECK_FALSE(labels.reachable(2));
  }
  SUBCASE("source out of range") {
    CHECK_THROWS_AS(dijkstra(diamond(), 9), std::invalid_argument);
  }
}

TEST_CASE("pruned graph on the diamond") {
  SUBCASE("full diamond survives") {
    const ShortestPathDag dag = build_shortest_path_dag(diamond(), 0, 3);
    CHECK(dag.arcs.size() == 4);
    CHECK(dag.shortest_distance() == 2);
  }
  SUBCASE("non-tight direct arc is pruned") {
    DirectedGraph g = diamond();
    g.arcs.push_back({0, 3, 3, 1});
    const ShortestPathDag dag = build_shortest_path_dag(g, 0, 3);
    CHECK(dag.arcs.size() == 4);  // the length-3 arc is gone
    for (const DagArc& arc : dag.arcs) CHECK(arc.origin_edge != 4);
  }
  SUBCASE("tight direct arc survives") {
    DirectedGraph g = diamond();
    g.arcs.push_back({0, 3, 2, 1});
    const ShortestPathDag dag = build_shortest_path_dag(g, 0, 3);
    CHECK(dag.arcs.size() == 5);
  }
  SUBCASE("unreachable sink") {
    DirectedGraph g;
    g.n = 3;
    g.arcs = {{0, 1, 1, 1}};
    CHECK_THROWS_AS(build_shortest_path_dag(g, 0, 2), InfeasibleError);
  }
  SUBCASE("vertex off every shortest route is dropped") {
    DirectedGraph g = diamond();
    g.n = 5;
    g.arcs.push_back({0, 4, 1, 1});  // dead end: reaches nothing
    const ShortestPathDag dag = build_shortest_path_dag(g, 0, 3);
    CHECK_FALSE(dag.vertex_kept[4]);
    CHECK(dag.arcs.size() == 4);
  }
}

TEST_CASE("orienting undirected graphs") {
  SUBCASE("4-cycle splits into two routes") {
    UndirectedGraph g;
    g.n = 4;  // s=0, a=1, t=2, b=3
    g.edges = {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 3, 1, 1}, {3, 0, 1, 1}};
    const ShortestPathDag dag = orient_undirected(g, 0, 2);
    REQUIRE(dag.arcs.size() == 4);
    std::set<std::pair<int, int>> oriented;
    for (const DagArc& arc : dag.arcs) oriented.insert({arc.tail, arc.head});
    CHECK(oriented == std::set<std::pair<int, int>>{
                          {0, 1}, {1, 2}, {0, 3}, {3, 2}});
  }
  SUBCASE("unit path plus tight chord keeps both routes") {
    UndirectedGraph g;
    g.n = 3;  // s=0, x=1, t=2
    g.edges = {{0, 1, 1, 1}, {1, 2, 1, 1}, {0, 2, 2, 1}};
    const ShortestPathDag dag = orient_undirected(g, 0, 2);
    CHECK(dag.arcs.size() == 3);
  }
  SUBCASE("grid orientation matches the directed construction") {
    const GridInstance grid = generate_grid(4);
    const ShortestPathDag dag =
        orient_undirected(grid.graph, grid.source, grid.sink);
    CHECK(dag.arcs.size() == grid.graph.edges.size());  // every edge kept
    for (const DagArc& arc : dag.arcs) {
      // Down or right in row-major ids.
      CHECK((arc.head == arc.tail + 1 || arc.head == arc.tail + 4));
    }
    // The directed down/right construction produces the same arc set.
    DirectedGraph directed;
    directed.n = grid.graph.n;
    for (const Edge& e : grid.graph.edges) {
      directed.arcs.push_back({std::min(e.u, e.v), std::max(e.u, e.v), 1, 1});
    }
    const ShortestPathDag dag2 = build_shortest_path_dag(directed, 0, 15);
    std::set<std::pair<int, int>> a1, a2;
    for (const DagArc& arc : dag.arcs) a1.insert({arc.tail, arc.head});
    for (const DagArc& arc : dag2.arcs) a2.insert({arc.tail, arc.head});
    CHECK(a1 == a2);
  }
}

TEST_CASE("pruned graph structural invariants on random instances") {
  divsol::testing::Rng rng(23);
  int done = 0;
  for (int trial = 0; done < 120 && trial < 4000; ++trial) {
    const auto inst = divsol::testing::random_path_instance(rng);
    const ShortestPathDag dag =
        build_shortest_path_dag(inst.graph, inst.source, inst.sink);
    // Acyclic: topological sort covers every kept vertex.
    REQUIRE_NOTHROW(topological_order(dag));
    // Tightness of every kept arc.
    for (const DagArc& arc : dag.arcs) {
      REQUIRE(dag.labels.dist[arc.tail] + arc.length ==
              dag.labels.dist[arc.head]);
    }
    // Degree invariant: kept vertices lie on some source-sink path.
    std::vector<int> indeg(dag.n, 0), outdeg(dag.n, 0);
    for (const DagArc& arc : dag.arcs) {
      ++outdeg[arc.tail];
      ++indeg[arc.head];
    }
    for (int v = 0; v < dag.n; ++v) {
      if (!dag.vertex_kept[v]) continue;
      if (v != dag.source) REQUIRE(indeg[v] >= 1);
      if (v != dag.sink) REQUIRE(outdeg[v] >= 1);
    }
    ++done;
  }
  REQUIRE(done == 120);
}

TEST_CASE("pruned-graph paths are exactly the shortest paths") {
  divsol::testing::Rng rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    const auto inst = divsol::testing::random_path_instance(rng);
    const ShortestPathDag dag =
        build_shortest_path_dag(inst.graph, inst.source, inst.sink);

    // Shortest paths of the input by exhaustive enumeration.
    const auto shortest = enumerate_shortest_paths(inst.graph, inst.source,
                                                   inst.sink, 1 << 20);
    std::set<std::vector<int>> expected;
    for (const PathResult& p : shortest) expected.insert(p.edges);

    // Source-sink paths of the pruned graph, restricted to its arcs.
    DirectedGraph pruned;
    pruned.n = dag.n;
    std::vector<int> origin;
    for (const DagArc& arc : dag.arcs) {
      pruned.arcs.push_back({arc.tail, arc.head, arc.length, arc.weight});
      origin.push_back(arc.origin_edge);
    }
    const auto dag_paths =
        all_simple_st_paths(pruned, inst.source, inst.sink, 1 << 20);
    std::set<std::vector<int>> actual;
    for (const PathResult& p : dag_paths) {
      std::vector<int> edges;
      for (int arc_id : p.edges) edges.push_back(origin[arc_id]);
      actual.insert(edges);
    }
    REQUIRE(actual == expected);
  }
}

TEST_CASE("path counting and hop length") {
  const GridInstance grid = generate_grid(3);
  const ShortestPathDag dag =
      orient_undirected(grid.graph, grid.source, grid.sink);
  CHECK(count_st_paths(dag) == 6);  // C(4, 2)
  CHECK(min_hop_length(dag) == 4);

  const ShortestPathDag diamond_dag = build_shortest_path_dag(
      [] {
        DirectedGraph g;
        g.n = 4;
        g.arcs = {{0, 1, 1, 1}, {1, 3, 1, 1}, {0, 2, 1, 1}, {2, 3, 1, 1}};
        return g;
      }(),
      0, 3);
  CHECK(count_st_paths(diamond_dag) == 2);
}
