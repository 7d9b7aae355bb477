#include "divsol/yen.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "divsol/shortest_dag.hpp"

namespace divsol {

namespace {

constexpr Dist kInf = std::numeric_limits<Dist>::max();

struct WorkArc {
  int tail;
  int head;
  Length length;
  int edge_id;   // id reported in PathResult::edges
  int block_id;  // removing this id removes the arc (both directions when
                 // the input is undirected)
};

struct WorkGraph {
  int n = 0;
  int block_ids = 0;
  std::vector<WorkArc> arcs;
  std::vector<Length> edge_length;    // by edge_id
  std::vector<std::vector<int>> out;  // sorted by (head, edge_id)
  std::vector<std::vector<int>> in;

  void finalize() {
    out.assign(n, {});
    in.assign(n, {});
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      out[arcs[i].tail].push_back(static_cast<int>(i));
      in[arcs[i].head].push_back(static_cast<int>(i));
    }
    for (auto& list : out) {
      std::sort(list.begin(), list.end(), [this](int x, int y) {
        return std::tie(arcs[x].head, arcs[x].edge_id) <
               std::tie(arcs[y].head, arcs[y].edge_id);
      });
    }
  }
};

WorkGraph make_work_graph(const DirectedGraph& g) {
  validate(g);
  WorkGraph w;
  w.n = g.n;
  w.block_ids = static_cast<int>(g.arcs.size());
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const Arc& a = g.arcs[i];
    w.arcs.push_back({a.tail, a.head, a.length, static_cast<int>(i),
                      static_cast<int>(i)});
    w.edge_length.push_back(a.length);
  }
  w.finalize();
  return w;
}

WorkGraph make_work_graph(const UndirectedGraph& g) {
  validate(g);
  WorkGraph w;
  w.n = g.n;
  w.block_ids = static_cast<int>(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    const int id = static_cast<int>(i);
    w.arcs.push_back({e.u, e.v, e.length, id, id});
    w.arcs.push_back({e.v, e.u, e.length, id, id});
    w.edge_length.push_back(e.length);
  }
  w.finalize();
  return w;
}

// Distance to the sink avoiding blocked arcs and vertices.
std::vector<Dist> dist_to_sink(const WorkGraph& g, int sink,
                               const std::vector<char>& arc_blocked,
                               const std::vector<char>& vertex_blocked) {
  std::vector<Dist> dist(g.n, kInf);
  if (vertex_blocked[sink]) return dist;
  dist[sink] = 0;
  using Item = std::pair<Dist, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.push({0, sink});
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[v]) continue;
    for (int arc_id : g.in[v]) {
      const WorkArc& arc = g.arcs[arc_id];
      if (arc_blocked[arc.block_id] || vertex_blocked[arc.tail]) continue;
      if (d + arc.length < dist[arc.tail]) {
        dist[arc.tail] = d + arc.length;
        heap.push({d + arc.length, arc.tail});
      }
    }
  }
  return dist;
}

// The lexicographically smallest shortest path from start, walking tight arcs
// with the smallest head (then edge id) first. Requires dist[start] < inf.
PathResult lex_shortest_walk(const WorkGraph& g, int start,
                             const std::vector<Dist>& dist,
                             const std::vector<char>& arc_blocked,
                             const std::vector<char>& vertex_blocked) {
  PathResult path;
  path.vertices.push_back(start);
  path.length = 0;
  int v = start;
  while (dist[v] != 0) {
    bool advanced = false;
    for (int arc_id : g.out[v]) {
      const WorkArc& arc = g.arcs[arc_id];
      if (arc_blocked[arc.block_id] || vertex_blocked[arc.head]) continue;
      if (dist[arc.head] != kInf && arc.length + dist[arc.head] == dist[v]) {
        path.vertices.push_back(arc.head);
        path.edges.push_back(arc.edge_id);
        path.length += arc.length;
        v = arc.head;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("tight-arc walk lost the sink");
  }
  return path;
}

std::vector<PathResult> yen_on_work_graph(const WorkGraph& g, int source,
                                          int sink, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (source < 0 || source >= g.n || sink < 0 || sink >= g.n) {
    throw std::invalid_argument("source/sink out of range");
  }
  std::vector<char> arc_blocked(g.block_ids, 0);
  std::vector<char> vertex_blocked(g.n, 0);

  const std::vector<Dist> base_dist =
      dist_to_sink(g, sink, arc_blocked, vertex_blocked);
  if (base_dist[source] == kInf) {
    throw InfeasibleError("sink unreachable from source");
  }

  std::vector<PathResult> accepted;
  accepted.push_back(
      lex_shortest_walk(g, source, base_dist, arc_blocked, vertex_blocked));
  if (source == sink) return accepted;  // only the empty path exists

  using CandidateKey = std::tuple<Length, std::vector<int>, std::vector<int>>;
  std::set<CandidateKey> candidates;

  while (static_cast<int>(accepted.size()) < k) {
    const PathResult prev = accepted.back();
    for (std::size_t spur = 0; spur + 1 < prev.vertices.size(); ++spur) {
      const int spur_node = prev.vertices[spur];
      // Block the next edge of every accepted path sharing the root, and the
      // root vertices themselves (loopless completion).
      std::fill(arc_blocked.begin(), arc_blocked.end(), 0);
      std::fill(vertex_blocked.begin(), vertex_blocked.end(), 0);
      Length root_length = 0;
      for (std::size_t i = 0; i < spur; ++i) {
        vertex_blocked[prev.vertices[i]] = 1;
        root_length += g.edge_length[prev.edges[i]];
      }
      for (const PathResult& p : accepted) {
        // Root equality is on edges: with parallel arcs, vertex prefixes
        // collide across genuinely different roots.
        if (p.edges.size() < spur + 1) continue;
        if (!std::equal(p.edges.begin(), p.edges.begin() + spur,
                        prev.edges.begin())) {
          continue;
        }
        arc_blocked[p.edges[spur]] = 1;
      }
      const std::vector<Dist> dist =
          dist_to_sink(g, sink, arc_blocked, vertex_blocked);
      if (dist[spur_node] == kInf) continue;
      PathResult tail =
          lex_shortest_walk(g, spur_node, dist, arc_blocked, vertex_blocked);

      PathResult candidate;
      candidate.vertices.assign(prev.vertices.begin(),
                                prev.vertices.begin() + spur);
      candidate.vertices.insert(candidate.vertices.end(),
                                tail.vertices.begin(), tail.vertices.end());
      candidate.edges.assign(prev.edges.begin(), prev.edges.begin() + spur);
      candidate.edges.insert(candidate.edges.end(), tail.edges.begin(),
                             tail.edges.end());
      candidate.length = root_length + tail.length;
      candidates.insert({candidate.length, std::move(candidate.vertices),
                         std::move(candidate.edges)});
    }
    if (candidates.empty()) break;
    auto best = candidates.begin();
    PathResult next;
    next.length = std::get<0>(*best);
    next.vertices = std::get<1>(*best);
    next.edges = std::get<2>(*best);
    candidates.erase(best);
    accepted.push_back(std::move(next));
  }
  return accepted;
}

}  // namespace

std::vector<PathResult> yen_k_shortest(const DirectedGraph& g, int source,
                                       int sink, int k) {
  return yen_on_work_graph(make_work_graph(g), source, sink, k);
}

std::vector<PathResult> yen_k_shortest(const UndirectedGraph& g, int source,
                                       int sink, int k) {
  return yen_on_work_graph(make_work_graph(g), source, sink, k);
}

}  // namespace divsol
