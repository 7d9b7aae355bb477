#include <doctest.h>

#include <set>
#include <vector>

#include "divsol/brute_force.hpp"
#include "divsol/min_cost_flow.hpp"
#include "random_instances.hpp"

using namespace divsol;

TEST_CASE("single arc") {
  FlowNetwork net;
  net.n = 2;
  net.source = 0;
  net.sink = 1;
  net.arcs = {{0, 1, 3, 5, ArcTag{}}};
  const IntegralFlow flow = min_cost_flow(net, 3);
  CHECK(flow.value == 3);
  CHECK(flow.cost == 15);
}

TEST_CASE("two parallel arcs pick the cheaper first") {
  FlowNetwork net;
  net.n = 2;
  net.source = 0;
  net.sink = 1;
  net.arcs = {{0, 1, 1, 2, ArcTag{}}, {0, 1, 1, 1, ArcTag{}}};
  const IntegralFlow flow = min_cost_flow(net, 2);
  CHECK(flow.cost == 3);
}

TEST_CASE("diamond expanded with two copies per arc") {
  // Unit-weight diamond, k=2: copy costs -1 and +1 per original arc.
  FlowNetwork net;
  net.n = 4;
  net.source = 0;
  net.sink = 3;
  const auto copies = [&](int u, int v, int element) {
    net.arcs.push_back({u, v, 1, -1, ArcTag{element, 1}});
    net.arcs.push_back({u, v, 1, +1, ArcTag{element, 2}});
  };
  copies(0, 1, 0);
  copies(1, 3, 1);
  copies(0, 2, 2);
  copies(2, 3, 3);
  const IntegralFlow flow = min_cost_flow(net, 2);
  CHECK(flow.cost == -4);  // both disjoint routes on first copies
  CHECK(brute_force_min_cost_flow(net, 2) == -4);

  SUBCASE("decomposes into the two routes") {
    const auto paths = decompose_unit_flow_paths(net, flow, 2);
    REQUIRE(paths.size() == 2);
    std::multiset<std::size_t> sizes{paths[0].size(), paths[1].size()};
    CHECK(sizes == std::multiset<std::size_t>{2, 2});
    std::set<int> used;
    for (const auto& path : paths)
      for (int arc : path) used.insert(net.arcs[arc].tag.element);
    CHECK(used == std::set<int>{0, 1, 2, 3});
  }
}

TEST_CASE("requirement zero gives the empty flow") {
  FlowNetwork net;
  net.n = 2;
  net.source = 0;
  net.sink = 1;
  net.arcs = {{0, 1, 1, -7, ArcTag{}}};
  const IntegralFlow flow = min_cost_flow(net, 0);
  CHECK(flow.value == 0);
  CHECK(flow.cost == 0);
}

TEST_CASE("infeasible requirement carries the achieved value") {
  FlowNetwork net;
  net.n = 3;
  net.source = 0;
  net.sink = 2;
  net.arcs = {{0, 1, 2, 1, ArcTag{}}, {1, 2, 1, 1, ArcTag{}}};
  try {
    min_cost_flow(net, 3);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(e.achieved() == 1);
  }
}

TEST_CASE("cyclic networks are rejected") {
  FlowNetwork net;
  net.n = 3;
  net.source = 0;
  net.sink = 2;
  net.arcs = {{0, 1, 1, 1, ArcTag{}},
              {1, 0, 1, 1, ArcTag{}},
              {1, 2, 1, 1, ArcTag{}}};
  CHECK_THROWS_AS(min_cost_flow(net, 1), std::invalid_argument);
}

TEST_CASE("single path decomposition") {
  FlowNetwork net;
  net.n = 3;
  net.source = 0;
  net.sink = 2;
  net.arcs = {{0, 1, 1, 0, ArcTag{}}, {1, 2, 1, 0, ArcTag{}}};
  const IntegralFlow flow = min_cost_flow(net, 1);
  const auto paths = decompose_unit_flow_paths(net, flow, 1);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0] == std::vector<int>{0, 1});
}

TEST_CASE("decomposition rejects non-unit saturated arcs") {
  FlowNetwork net;
  net.n = 2;
  net.source = 0;
  net.sink = 1;
  net.arcs = {{0, 1, 2, 0, ArcTag{}}};
  const IntegralFlow flow = min_cost_flow(net, 2);
  CHECK_THROWS_AS(decompose_unit_flow_paths(net, flow, 2),
                  std::invalid_argument);
}

TEST_CASE("matches brute force on random small networks") {
  divsol::testing::Rng rng(41);
  int feasible_cases = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const FlowNetwork net = divsol::testing::random_dag_network(rng);
    const std::int64_t requirement = divsol::testing::uniform(rng, 0, 3);
    std::int64_t expected = 0;
    bool expect_feasible = true;
    try {
      expected = brute_force_min_cost_flow(net, requirement);
    } catch (const InfeasibleError&) {
      expect_feasible = false;
    }
    if (expect_feasible) {
      const IntegralFlow flow = min_cost_flow(net, requirement);
      REQUIRE(flow.cost == expected);
      ++feasible_cases;
    } else {
      CHECK_THROWS_AS(min_cost_flow(net, requirement), InfeasibleError);
    }
  }
  REQUIRE(feasible_cases > 100);  // the generator must exercise real cases
}
