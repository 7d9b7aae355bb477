#include "divsol/min_cost_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace divsol {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

void check_network(const FlowNetwork& net) {
  if (net.n <= 0) throw std::invalid_argument("empty flow network");
  for (int v : {net.source, net.sink}) {
    if (v < 0 || v >= net.n) {
      throw std::invalid_argument("source/sink out of range");
    }
  }
  for (const FlowArc& arc : net.arcs) {
    if (arc.tail < 0 || arc.tail >= net.n || arc.head < 0 ||
        arc.head >= net.n) {
      throw std::invalid_argument("flow arc endpoint out of range");
    }
    if (arc.capacity < 0) throw std::invalid_argument("negative capacity");
  }
}

// Topological order of the arcs' underlying digraph; empty optional-like
// failure is reported by size mismatch.
std::vector<int> topo_order_or_throw(const FlowNetwork& net) {
  std::vector<int> indegree(net.n, 0);
  std::vector<std::vector<int>> out(net.n);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    out[net.arcs[i].tail].push_back(static_cast<int>(i));
    ++indegree[net.arcs[i].head];
  }
  std::vector<int> order;
  order.reserve(net.n);
  for (int v = 0; v < net.n; ++v) {
    if (indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int arc_id : out[order[i]]) {
      if (--indegree[net.arcs[arc_id].head] == 0) {
        order.push_back(net.arcs[arc_id].head);
      }
    }
  }
  if (static_cast<int>(order.size()) != net.n) {
    throw std::invalid_argument("flow network must be acyclic");
  }
  return order;
}

// Residual arcs are stored in pairs: 2i forward, 2i+1 backward.
struct Residual {
  std::vector<int> head;
  std::vector<std::int64_t> remaining;
  std::vector<std::int64_t> cost;
  std::vector<std::vector<int>> out;  // residual arc ids by tail, ascending

  explicit Residual(const FlowNetwork& net) : out(net.n) {
    const std::size_t m = net.arcs.size();
    head.resize(2 * m);
    remaining.resize(2 * m);
    cost.resize(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      const FlowArc& arc = net.arcs[i];
      head[2 * i] = arc.head;
      remaining[2 * i] = arc.capacity;
      cost[2 * i] = arc.cost;
      head[2 * i + 1] = arc.tail;
      remaining[2 * i + 1] = 0;
      cost[2 * i + 1] = -arc.cost;
      out[arc.tail].push_back(static_cast<int>(2 * i));
      out[arc.head].push_back(static_cast<int>(2 * i + 1));
    }
  }
};

}  // namespace

IntegralFlow min_cost_flow(const FlowNetwork& net, std::int64_t requirement) {
  check_network(net);
  if (requirement < 0) throw std::invalid_argument("negative flow requirement");
  const std::vector<int> topo = topo_order_or_throw(net);

  Residual residual(net);
  std::vector<std::int64_t> potential(net.n, kInf);
  potential[net.source] = 0;
  for (int v : topo) {
    if (potential[v] == kInf) continue;
    for (int arc_id : residual.out[v]) {
      if (arc_id % 2 != 0 || residual.remaining[arc_id] == 0) continue;
      potential[residual.head[arc_id]] =
          std::min(potential[residual.head[arc_id]],
                   potential[v] + residual.cost[arc_id]);
    }
  }
  std::replace(potential.begin(), potential.end(), kInf, std::int64_t{0});

  std::vector<std::int64_t> dist(net.n);
  std::vector<int> parent_arc(net.n);
  IntegralFlow flow;
  flow.arc_flow.assign(net.arcs.size(), 0);

  while (flow.value < requirement) {
    // Dijkstra on reduced costs; (dist, vertex) heap order plus
    // strict-improvement relaxation in arc-id order makes ties deterministic.
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    dist[net.source] = 0;
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.push({0, net.source});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) continue;
      for (int arc_id : residual.out[u]) {
        if (residual.remaining[arc_id] == 0) continue;
        const int v = residual.head[arc_id];
        const std::int64_t reduced =
            d + residual.cost[arc_id] + potential[u] - potential[v];
        if (reduced < dist[v]) {
          dist[v] = reduced;
          parent_arc[v] = arc_id;
          heap.push({reduced, v});
        }
      }
    }
    if (dist[net.sink] == kInf) {
      throw InfeasibleError(
          "flow requirement " + std::to_string(requirement) +
              " infeasible, achieved " + std::to_string(flow.value),
          flow.value);
    }
    for (int v = 0; v < net.n; ++v) {
      if (dist[v] != kInf) potential[v] += dist[v];
    }
    std::int64_t bottleneck = requirement - flow.value;
    for (int v = net.sink; v != net.source;) {
      const int arc_id = parent_arc[v];
      bottleneck = std::min(bottleneck, residual.remaining[arc_id]);
      v = residual.head[arc_id ^ 1];
    }
    for (int v = net.sink; v != net.source;) {
      const int arc_id = parent_arc[v];
      residual.remaining[arc_id] -= bottleneck;
      residual.remaining[arc_id ^ 1] += bottleneck;
      const int original = arc_id / 2;
      flow.arc_flow[original] += (arc_id % 2 == 0) ? bottleneck : -bottleneck;
      flow.cost += residual.cost[arc_id] * bottleneck;
      v = residual.head[arc_id ^ 1];
    }
    flow.value += bottleneck;
  }

  verify_flow(net, flow, requirement);
  return flow;
}

void verify_flow(const FlowNetwork& net, const IntegralFlow& flow,
                 std::int64_t requirement) {
  if (flow.arc_flow.size() != net.arcs.size()) {
    throw std::logic_error("flow vector does not match the network");
  }
  std::vector<std::int64_t> balance(net.n, 0);
  std::int64_t cost = 0;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& arc = net.arcs[i];
    const std::int64_t f = flow.arc_flow[i];
    if (f < 0 || f > arc.capacity) {
      throw std::logic_error("arc flow violates capacity bounds");
    }
    balance[arc.tail] += f;
    balance[arc.head] -= f;
    cost += arc.cost * f;
  }
  for (int v = 0; v < net.n; ++v) {
    if (v == net.source || v == net.sink) continue;
    if (balance[v] != 0) {
      throw std::logic_error("flow conservation violated at vertex " +
                             std::to_string(v));
    }
  }
  if (balance[net.source] != requirement || flow.value != requirement) {
    throw std::logic_error("flow value differs from the requirement");
  }
  if (cost != flow.cost) throw std::logic_error("flow cost mismatch");
}

std::vector<std::vector<int>> decompose_unit_flow_paths(
    const FlowNetwork& net, const IntegralFlow& flow, std::int64_t k) {
  if (flow.value != k) {
    throw std::invalid_argument("flow value differs from requested path count");
  }
  std::vector<std::vector<int>> saturated_out(net.n);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (flow.arc_flow[i] == 0) continue;
    if (net.arcs[i].capacity != 1 || flow.arc_flow[i] != 1) {
      throw std::invalid_argument(
          "decomposition requires unit capacity on every flow-carrying arc");
    }
    saturated_out[net.arcs[i].tail].push_back(static_cast<int>(i));
  }
  // Arc ids were pushed in ascending order; a per-vertex cursor walks each
  // saturated arc exactly once.
  std::vector<std::size_t> cursor(net.n, 0);
  std::vector<std::vector<int>> paths;
  paths.reserve(static_cast<std::size_t>(k));
  for (std::int64_t p = 0; p < k; ++p) {
    std::vector<int> path;
    int v = net.source;
    while (v != net.sink) {
      if (cursor[v] >= saturated_out[v].size()) {
        throw std::logic_error("flow decomposition stuck at vertex " +
                               std::to_string(v));
      }
      const int arc_id = saturated_out[v][cursor[v]++];
      path.push_back(arc_id);
      v = net.arcs[arc_id].head;
    }
    paths.push_back(std::move(path));
  }
  for (int v = 0; v < net.n; ++v) {
    if (cursor[v] != saturated_out[v].size()) {
      throw std::logic_error("flow decomposition left saturated arcs behind");
    }
  }
  return paths;
}

}  // namespace divsol
