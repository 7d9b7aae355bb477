// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Random suites are seeded and deterministic.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "divsol/bench.hpp"
#include "divsol/brute_force.hpp"
#include "divsol/diverse_matching.hpp"
#include "divsol/diverse_paths.hpp"
#include "divsol/diversity.hpp"
#include "divsol/matroid.hpp"
#include "divsol/shortest_dag.hpp"
#include "divsol/yen.hpp"
#include "random_instances.hpp"

using namespace divsol;
using divsol::testing::Rng;
using divsol::testing::uniform;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// -- criterion 1 & 2: grid optima ------------------------------------------

void grid_series(int criterion, const std::vector<std::pair<int, int>>& cases,
                 const std::vector<std::int64_t>& expected,
                 double budget_seconds) {
  bool ok = true;
  std::string detail;
  double slowest = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto [side, k] = cases[i];
    const GridInstance grid = generate_grid(side);
    const auto start = std::chrono::steady_clock::now();
    const DiversePathsResult r =
        diverse_shortest_paths(grid.graph, grid.source, grid.sink, k);
    const double elapsed = seconds_since(start);
    slowest = std::max(slowest, elapsed);
    if (r.solutions.diversity != expected[i] || elapsed >= budget_seconds) {
      ok = false;
    }
    detail += "p=" + std::to_string(side) + ",k=" + std::to_string(k) + ": " +
              std::to_string(r.solutions.diversity) +
              (r.solutions.diversity == expected[i]
                   ? ""
                   : "(expected " + std::to_string(expected[i]) + ")") +
              "  ";
  }
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "slowest %.2fs of %.0fs", slowest,
                budget_seconds);
  report(criterion, ok, detail + buffer);
}

// -- criterion 3: packing weight equals decoded diversity -------------------

bool packing_identity_paths(int trials) {
  Rng rng(301);
  for (int done = 0; done < trials;) {
    const auto inst = divsol::testing::random_path_instance(rng, 12, 4, 5);
    const int k = uniform(rng, 1, 6);
    const DiversePathsResult r =
        diverse_shortest_paths(inst.graph, inst.source, inst.sink, k);
    std::vector<Weight> w;
    for (const Arc& a : inst.graph.arcs) w.push_back(a.weight);
    if (r.packing_weight != diversity_pairwise(r.solutions.sets, w)) {
      return false;
    }
    ++done;
  }
  return true;
}

bool packing_identity_matchings(int trials) {
  Rng rng(302);
  for (int done = 0; done < trials;) {
    const BipartiteGraph g = divsol::testing::random_bipartite_graph(rng, 5);
    const int k = uniform(rng, 1, 4);
    const int cardinality = uniform(rng, 1, 3);
    DiverseMatchingsResult r;
    try {
      r = diverse_bipartite_matchings(g, k, cardinality);
    } catch (const InfeasibleError&) {
      continue;
    }
    std::vector<Weight> w;
    for (const BipartiteEdge& e : g.edges) w.push_back(e.weight);
    if (r.packing_weight != diversity_pairwise(r.solutions.sets, w)) {
      return false;
    }
    ++done;
  }
  return true;
}

bool packing_identity_bases(int trials) {
  Rng rng(303);
  for (int done = 0; done < trials;) {
    const int k = uniform(rng, 1, 4);
    std::vector<Weight> w;
    if (done % 2 == 0) {
      const UndirectedGraph g =
          divsol::testing::random_connected_graph(rng, 7);
      const GraphicMatroid m(g);
      for (const Edge& e : g.edges) w.push_back(e.weight);
      const DiverseBasesResult r = weighted_diverse_bases(m, w, k);
      if (r.packing_weight != diversity_pairwise(r.solutions.sets, w)) {
        return false;
      }
    } else {
      const int n = uniform(rng, 2, 8);
      const UniformMatroid m(n, uniform(rng, 1, n));
      for (int e = 0; e < n; ++e) w.push_back(uniform(rng, 0, 5));
      const DiverseBasesResult r = weighted_diverse_bases(m, w, k);
      if (r.packing_weight != diversity_pairwise(r.solutions.sets, w)) {
        return false;
      }
    }
    ++done;
  }
  return true;
}

// -- criterion 4: brute-force oracle equivalence ----------------------------

bool oracle_paths(int trials) {
  Rng rng(401);
  for (int done = 0; done < trials;) {
    const auto inst = divsol::testing::random_path_instance(rng, 9);
    const int k = uniform(rng, 1, 3);
    SolutionSet expected;
    try {
      expected =
          brute_force_diverse_paths(inst.graph, inst.source, inst.sink, k);
    } catch (const std::invalid_argument&) {
      continue;  // over the 50-shortest-path oracle budget
    }
    const DiversePathsResult r =
        diverse_shortest_paths(inst.graph, inst.source, inst.sink, k);
    if (r.solutions.diversity != expected.diversity) return false;
    ++done;
  }
  return true;
}

bool oracle_matchings(int trials) {
  Rng rng(402);
  for (int done = 0; done < trials;) {
    const BipartiteGraph g = divsol::testing::random_bipartite_graph(rng, 4);
    const int k = uniform(rng, 1, 3);
    const int cardinality = uniform(rng, 1, 3);
    SolutionSet expected;
    try {
      expected = brute_force_diverse_matchings(g, k, cardinality);
    } catch (const InfeasibleError&) {
      continue;
    }
    const DiverseMatchingsResult r =
        diverse_bipartite_matchings(g, k, cardinality);
    if (r.solutions.diversity != expected.diversity) return false;
    ++done;
  }
  return true;
}

bool oracle_bases(int trials) {
  Rng rng(403);
  for (int done = 0; done < trials;) {
    const int k = uniform(rng, 1, 3);
    std::vector<Weight> w;
    std::int64_t got = 0, expected = 0;
    if (done % 2 == 0) {
      UndirectedGraph g = divsol::testing::random_connected_graph(rng, 5);
      while (g.edges.size() > 6) g.edges.pop_back();
      const GraphicMatroid m(g);
      for (const Edge& e : g.edges) w.push_back(e.weight);
      got = weighted_diverse_bases(m, w, k).solutions.diversity;
      expected = brute_force_diverse_bases(m, w, k).diversity;
    } else {
      const int n = uniform(rng, 1, 6);
      const UniformMatroid m(n, uniform(rng, 1, n));
      for (int e = 0; e < n; ++e) w.push_back(uniform(rng, 0, 3));
      got = weighted_diverse_bases(m, w, k).solutions.diversity;
      expected = brute_force_diverse_bases(m, w, k).diversity;
    }
    if (got != expected) return false;
    ++done;
  }
  return true;
}

// -- criterion 5: pruned-graph path set equals the shortest-path set --------

bool pruned_dag_suite(int trials) {
  Rng rng(501);
  for (int done = 0; done < trials;) {
    const auto inst = divsol::testing::random_path_instance(rng, 9);
    const ShortestPathDag dag =
        build_shortest_path_dag(inst.graph, inst.source, inst.sink);
    const auto shortest = enumerate_shortest_paths(inst.graph, inst.source,
                                                   inst.sink, 1 << 20);
    std::set<std::vector<int>> expected;
    for (const PathResult& p : shortest) expected.insert(p.edges);
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
    if (actual != expected) return false;
    ++done;
  }
  return true;
}

// -- criterion 6: the two diversity formulas --------------------------------

bool formula_identity(int trials) {
  Rng rng(601);
  for (int done = 0; done < trials; ++done) {
    const int ground = uniform(rng, 1, 12);
    const int k = uniform(rng, 1, 8);
    std::vector<Weight> weights(ground);
    for (auto& w : weights) w = uniform(rng, 0, 6);
    std::vector<ElementSet> sets(k);
    for (auto& s : sets) {
      for (int e = 0; e < ground; ++e) {
        if (uniform(rng, 0, 1)) s.push_back(e);
      }
    }
    if (diversity_pairwise(sets, weights) !=
        diversity_multiplicity(sets, weights)) {
      return false;
    }
  }
  return true;
}

// -- criterion 7: coloring + rebalancing ------------------------------------

bool matching_decomposition(int trials) {
  Rng rng(701);
  for (int done = 0; done < trials; ++done) {
    const int k = uniform(rng, 1, 4);
    const int cardinality = uniform(rng, 1, 3);
    const auto sub =
        divsol::testing::random_degree_bounded_multigraph(rng, k, cardinality);
    const auto coloring = bipartite_edge_color(sub, k);
    std::set<std::pair<int, int>> left, right;
    for (std::size_t i = 0; i < sub.edges.size(); ++i) {
      if (coloring[i] < 1 || coloring[i] > k) return false;
      if (!left.insert({sub.edges[i].a, coloring[i]}).second) return false;
      if (!right.insert({sub.edges[i].b, coloring[i]}).second) return false;
    }
    std::vector<std::vector<int>> classes(k);
    for (std::size_t i = 0; i < coloring.size(); ++i) {
      classes[coloring[i] - 1].push_back(static_cast<int>(i));
    }
    std::multiset<int> before;
    for (const auto& c : classes) before.insert(c.begin(), c.end());
    const auto balanced = rebalance_matchings(classes, cardinality, sub);
    std::multiset<int> after;
    for (const auto& c : balanced) {
      if (c.size() != static_cast<std::size_t>(cardinality)) return false;
      std::set<int> la, rb;
      for (int instance : c) {
        if (!la.insert(sub.edges[instance].a).second) return false;
        if (!rb.insert(sub.edges[instance].b).second) return false;
      }
      after.insert(c.begin(), c.end());
    }
    if (before != after) return false;
  }
  return true;
}

// -- criterion 8: dominance over the k-best baseline ------------------------

void dominance() {
  BenchConfig config;
  config.grid_sides = {40, 50, 60};
  config.k_values = {10};
  config.zero_timings = true;
  const auto rows = run_benchmark(config);
  bool ok = rows.size() == 6;
  std::string detail;
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    const BenchRow& ours = rows[i];
    const BenchRow& kbest = rows[i + 1];
    if (ours.algo != "ours" || kbest.algo != "kbest") ok = false;
    if (ours.diversity < kbest.diversity) ok = false;
    if (ours.diversity <= 6000) ok = false;
    if (kbest.diversity >= 1000) ok = false;
    detail += "p=" + ours.p_or_file + ": ours " +
              std::to_string(ours.diversity) + " vs kbest " +
              std::to_string(kbest.diversity) + "  ";
  }
  report(8, ok, "dominance on unit grids, k=10  " + detail);
}

}  // namespace

int main() {
  grid_series(1, {{40, 10}, {50, 10}, {60, 10}}, {6876, 8676, 10476}, 10.0);
  grid_series(2, {{40, 50}, {40, 100}}, {182652, 731832}, 120.0);

  const bool paths3 = packing_identity_paths(200);
  const bool matchings3 = packing_identity_matchings(200);
  const bool bases3 = packing_identity_bases(200);
  report(3, paths3 && matchings3 && bases3,
         std::string("packing weight equals decoded diversity, 200 random "
                     "instances per family (paths ") +
             (paths3 ? "ok" : "FAIL") + ", matchings " +
             (matchings3 ? "ok" : "FAIL") + ", bases " +
             (bases3 ? "ok" : "FAIL") + ")");

  const bool paths4 = oracle_paths(300);
  const bool matchings4 = oracle_matchings(200);
  const bool bases4 = oracle_bases(200);
  report(4, paths4 && matchings4 && bases4,
         std::string("optimum equals exhaustive enumeration (paths 300: ") +
             (paths4 ? "ok" : "FAIL") + ", matchings 200: " +
             (matchings4 ? "ok" : "FAIL") + ", bases 200: " +
             (bases4 ? "ok" : "FAIL") + ")");

  report(5, pruned_dag_suite(300),
         "pruned-graph path set equals the shortest-path set, 300 graphs");
  report(6, formula_identity(1000),
         "pairwise and multiplicity formulas agree on 1000 random triples");
  report(7, matching_decomposition(200),
         "proper coloring and exact-cardinality rebalance on 200 multigraphs");
  dominance();
  std::printf(
      "NOTE criterion 9: declared not desk-reproducible (dataset-scale "
      "tables and absolute runtimes); covered by criteria 1-8.\n");

  return failures == 0 ? 0 : 1;
}
