#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "divsol/brute_force.hpp"
#include "divsol/diverse_matching.hpp"
#include "random_instances.hpp"

using namespace divsol;

namespace {

BipartiteGraph complete_bipartite(int a, int b) {
  BipartiteGraph g;
  g.left_count = a;
  g.right_count = b;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.edges.push_back({i, j, 1});
  }
  return g;
}

void check_proper(const DegreeBoundedSubgraph& sub,
                  const std::vector<int>& coloring, int k) {
  REQUIRE(coloring.size() == sub.edges.size());
  std::set<std::pair<int, int>> seen_left, seen_right;
  for (std::size_t i = 0; i < sub.edges.size(); ++i) {
    REQUIRE(coloring[i] >= 1);
    REQUIRE(coloring[i] <= k);
    REQUIRE(seen_left.insert({sub.edges[i].a, coloring[i]}).second);
    REQUIRE(seen_right.insert({sub.edges[i].b, coloring[i]}).second);
  }
}

}  // namespace

TEST_CASE("bipartite edge-list parsing") {
  const BipartiteGraph g =
      parse_bipartite_edgelist("b 2 2 3\ne 0 0 1\ne 0 1 2\ne 1 1 5\n");
  CHECK(g.left_count == 2);
  CHECK(g.right_count == 2);
  REQUIRE(g.edges.size() == 3);
  CHECK(g.edges[2].weight == 5);
  CHECK_THROWS_AS(parse_bipartite_edgelist("e 0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_bipartite_edgelist("b 1 1 1\ne 0 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_bipartite_edgelist("b 1 1 2\ne 0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_bipartite_edgelist("b 1 1 1\ne 0 0 -2\n"), ParseError);
}

TEST_CASE("matching network construction") {
  SUBCASE("K22, k=2, p=2") {
    const FlowNetwork net = build_matching_network(complete_bipartite(2, 2),
                                                   2, 2);
    int aux = 0, copies = 0;
    for (const FlowArc& arc : net.arcs) {
      if (arc.tag.auxiliary()) {
        CHECK(arc.capacity == 2);
        CHECK(arc.cost == 0);
        ++aux;
      } else {
        CHECK(arc.capacity == 1);
        ++copies;
      }
    }
    CHECK(aux == 4);
    CHECK(copies == 8);
  }
  SUBCASE("single edge, k=1, p=1") {
    const FlowNetwork net = build_matching_network(complete_bipartite(1, 1),
                                                   1, 1);
    CHECK(net.arcs.size() == 3);
  }
  SUBCASE("K33, k=3 has 27 copies") {
    const FlowNetwork net = build_matching_network(complete_bipartite(3, 3),
                                                   3, 3);
    int copies = 0;
    for (const FlowArc& arc : net.arcs) {
      if (!arc.tag.auxiliary()) ++copies;
    }
    CHECK(copies == 27);
  }
}

TEST_CASE("edge coloring") {
  SUBCASE("two edges sharing a right vertex get both colors") {
    DegreeBoundedSubgraph sub{2, 1, {{0, 0, 0}, {1, 1, 0}}};
    const auto coloring = bipartite_edge_color(sub, 2);
    check_proper(sub, coloring, 2);
    CHECK(std::set<int>(coloring.begin(), coloring.end()) ==
          std::set<int>{1, 2});
  }
  SUBCASE("4-cycle alternates") {
    DegreeBoundedSubgraph sub{
        2, 2, {{0, 0, 0}, {1, 0, 1}, {2, 1, 0}, {3, 1, 1}}};
    const auto coloring = bipartite_edge_color(sub, 2);
    check_proper(sub, coloring, 2);
  }
  SUBCASE("disjoint edges still use every color") {
    DegreeBoundedSubgraph sub{
        4, 4, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}}};
    const auto coloring = bipartite_edge_color(sub, 2);
    check_proper(sub, coloring, 2);
    CHECK(std::set<int>(coloring.begin(), coloring.end()) ==
          std::set<int>{1, 2});
  }
  SUBCASE("parallel copies land in distinct colors") {
    DegreeBoundedSubgraph sub{1, 1, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
    const auto coloring = bipartite_edge_color(sub, 3);
    check_proper(sub, coloring, 3);
  }
  SUBCASE("degree above k is rejected") {
    DegreeBoundedSubgraph sub{2, 1, {{0, 0, 0}, {1, 1, 0}}};
    CHECK_THROWS_AS(bipartite_edge_color(sub, 1), std::invalid_argument);
  }
}

TEST_CASE("coloring is proper on random degree-bounded multigraphs") {
  divsol::testing::Rng rng(97);
  for (int trial = 0; trial < 120; ++trial) {
    const int k = divsol::testing::uniform(rng, 1, 4);
    const int cardinality = divsol::testing::uniform(rng, 1, 3);
    const auto sub =
        divsol::testing::random_degree_bounded_multigraph(rng, k, cardinality);
    const auto coloring = bipartite_edge_color(sub, k);
    check_proper(sub, coloring, k);
    if (sub.edges.size() >= static_cast<std::size_t>(k)) {
      std::set<int> used(coloring.begin(), coloring.end());
      REQUIRE(used.size() == static_cast<std::size_t>(k));
    }
  }
}

TEST_CASE("rebalancing") {
  SUBCASE("sizes (3,1) even out to (2,2) with the union preserved") {
    DegreeBoundedSubgraph sub{
        4, 4, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}}};
    auto balanced = rebalance_matchings({{0, 1, 2}, {3}}, 2, sub);
    REQUIRE(balanced.size() == 2);
    CHECK(balanced[0].size() == 2);
    CHECK(balanced[1].size() == 2);
    std::multiset<int> all;
    for (const auto& m : balanced) all.insert(m.begin(), m.end());
    CHECK(all == std::multiset<int>{0, 1, 2, 3});
  }
  SUBCASE("already balanced input is unchanged") {
    DegreeBoundedSubgraph sub{2, 2, {{0, 0, 0}, {1, 1, 1}}};
    const std::vector<std::vector<int>> input{{0}, {1}};
    CHECK(rebalance_matchings(input, 1, sub) == input);
  }
  SUBCASE("wrong total is rejected") {
    DegreeBoundedSubgraph sub{2, 2, {{0, 0, 0}}};
    CHECK_THROWS_AS(rebalance_matchings({{0}, {}}, 1, sub),
                    std::invalid_argument);
  }
}

TEST_CASE("color classes rebalance on random multigraphs") {
  divsol::testing::Rng rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    const int k = divsol::testing::uniform(rng, 1, 3);
    const int cardinality = divsol::testing::uniform(rng, 1, 3);
    const auto sub =
        divsol::testing::random_degree_bounded_multigraph(rng, k, cardinality);
    const auto coloring = bipartite_edge_color(sub, k);
    std::vector<std::vector<int>> classes(k);
    for (std::size_t i = 0; i < coloring.size(); ++i) {
      classes[coloring[i] - 1].push_back(static_cast<int>(i));
    }
    std::multiset<int> union_before;
    for (const auto& c : classes) union_before.insert(c.begin(), c.end());
    const auto balanced = rebalance_matchings(classes, cardinality, sub);
    std::multiset<int> union_after;
    for (const auto& c : balanced) {
      REQUIRE(c.size() == static_cast<std::size_t>(cardinality));
      // Still a matching.
      std::set<int> left, right;
      for (int instance : c) {
        REQUIRE(left.insert(sub.edges[instance].a).second);
        REQUIRE(right.insert(sub.edges[instance].b).second);
      }
      union_after.insert(c.begin(), c.end());
    }
    REQUIRE(union_before == union_after);
  }
}

TEST_CASE("diverse matchings on named instances") {
  SUBCASE("K22, k=2, p=2: two disjoint perfect matchings") {
    const auto r = diverse_bipartite_matchings(complete_bipartite(2, 2), 2, 2);
    CHECK(r.solutions.diversity == 4);
    CHECK(brute_force_diverse_matchings(complete_bipartite(2, 2), 2, 2)
              .diversity == 4);
  }
  SUBCASE("K33, k=3, p=3: three disjoint perfect matchings") {
    const auto r = diverse_bipartite_matchings(complete_bipartite(3, 3), 3, 3);
    CHECK(r.solutions.diversity == 18);
  }
  SUBCASE("single edge, k=1, p=1") {
    const auto r = diverse_bipartite_matchings(complete_bipartite(1, 1), 1, 1);
    CHECK(r.solutions.diversity == 0);
    REQUIRE(r.solutions.sets.size() == 1);
    CHECK(r.solutions.sets[0] == ElementSet{0});
  }
  SUBCASE("infeasible cardinality") {
    CHECK_THROWS_AS(diverse_bipartite_matchings(complete_bipartite(1, 1), 1, 2),
                    InfeasibleError);
  }
}

TEST_CASE("matchings match brute force on small graphs") {
  divsol::testing::Rng rng(103);
  int done = 0;
  for (int trial = 0; done < 100 && trial < 3000; ++trial) {
    const BipartiteGraph g = divsol::testing::random_bipartite_graph(rng);
    const int k = divsol::testing::uniform(rng, 1, 3);
    const int cardinality = divsol::testing::uniform(rng, 1, 3);
    SolutionSet expected;
    try {
      expected = brute_force_diverse_matchings(g, k, cardinality);
    } catch (const InfeasibleError&) {
      CHECK_THROWS_AS(diverse_bipartite_matchings(g, k, cardinality),
                      InfeasibleError);
      continue;
    }
    const auto r = diverse_bipartite_matchings(g, k, cardinality);
    REQUIRE(r.solutions.diversity == expected.diversity);
    // Every output set is a matching of the exact cardinality.
    for (const ElementSet& matching : r.solutions.sets) {
      REQUIRE(matching.size() == static_cast<std::size_t>(cardinality));
      std::set<int> left, right;
      for (int e : matching) {
        REQUIRE(left.insert(g.edges[e].a).second);
        REQUIRE(right.insert(g.edges[e].b).second);
      }
    }
    REQUIRE(r.packing_weight == r.solutions.diversity);
    ++done;
  }
  REQUIRE(done == 100);
}
