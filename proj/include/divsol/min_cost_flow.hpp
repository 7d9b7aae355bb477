#pragma once

#include <cstdint>
#include <vector>

#include "divsol/errors.hpp"

namespace divsol {

struct ArcTag {
  int element = -1;    // ground-set element id; -1 marks an auxiliary arc
  int copy_index = 0;  // 1-based copy index when element >= 0

  bool auxiliary() const { return element < 0; }
};

struct FlowArc {
  int tail = 0;
  int head = 0;
  std::int64_t capacity = 0;
  std::int64_t cost = 0;  // signed; copy arcs carry -w*(e_i)
  ArcTag tag;
};

// Every network in this artifact is acyclic; min_cost_flow verifies that.
struct FlowNetwork {
  int n = 0;
  int source = 0;
  int sink = 0;
  std::vector<FlowArc> arcs;
};

struct IntegralFlow {
  std::vector<std::int64_t> arc_flow;  // parallel to FlowNetwork::arcs
  std::int64_t value = 0;
  std::int64_t cost = 0;
};

// Integral min-cost flow of value exactly `requirement`, by successive
// shortest augmenting paths with vertex potentials. Negative costs are fine:
// initial potentials come from one relaxation pass in topological order
// (valid because the network is a DAG), later iterations run Dijkstra on
// non-negative reduced costs. Among equal-cost paths the lower arc id wins,
// so the result is deterministic.
//
// Throws InfeasibleError (carrying the achieved maximum) when the max flow
// falls short of the requirement, std::invalid_argument on a cyclic network.
IntegralFlow min_cost_flow(const FlowNetwork& net, std::int64_t requirement);

// Splits a flow whose saturated arcs all have capacity 1 into k arc-disjoint
// source-sink paths covering exactly the saturated arcs. Returns arc-id
// sequences. Throws std::invalid_argument on a non-unit saturated arc or a
// flow value other than k.
std::vector<std::vector<int>> decompose_unit_flow_paths(
    const FlowNetwork& net, const IntegralFlow& flow, std::int64_t k);

// Capacity, conservation, and value checks; throws std::logic_error on any
// violation. Cheap (linear), run after every solve.
void verify_flow(const FlowNetwork& net, const IntegralFlow& flow,
                 std::int64_t requirement);

}  // namespace divsol
