#pragma once

#include <cstdint>
#include <vector>

#include "divsol/errors.hpp"

namespace divsol {

using Length = std::int64_t;
using Weight = std::int64_t;

// Input bounds. With length <= 2^31 and < 2^20 vertices, shortest-path
// distances stay far below the int64 range.
inline constexpr int kMaxVertices = 1 << 20;
inline constexpr Length kMaxLength = Length{1} << 31;

struct Arc {
  int tail = 0;
  int head = 0;
  Length length = 1;
  Weight weight = 0;
};

// Immutable after construction. Parallel arcs and self-loops are permitted;
// self-loops never survive shortest-path pruning.
struct DirectedGraph {
  int n = 0;
  std::vector<Arc> arcs;
};

struct Edge {
  int u = 0;
  int v = 0;
  Length length = 1;
  Weight weight = 0;
};

// Immutable after construction. Parallel edges permitted, self-loops are not.
struct UndirectedGraph {
  int n = 0;
  std::vector<Edge> edges;
};

// Throws std::invalid_argument on id-range violations, non-positive lengths,
// or negative weights (negative weights get a distinct message: the copy
// expansion requires non-increasing copy weights, which fails for w < 0).
void validate(const DirectedGraph& g);
void validate(const UndirectedGraph& g);

struct GridSpec {
  int side = 2;  // p >= 2; the generated graph has p^2 vertices, 2p(p-1) edges
};

struct GridInstance {
  UndirectedGraph graph;
  int source = 0;  // top-left corner
  int sink = 0;    // bottom-right corner
};

// Unit p x p grid: vertices are (row, col) pairs flattened row-major, edges
// join Manhattan-distance-1 pairs, every length and weight is 1.
GridInstance generate_grid(const GridSpec& spec);
GridInstance generate_grid(int side);

// Every undirected edge as two arcs sharing the original edge id; edge ids are
// recovered through arc_to_edge (arc 2i and 2i+1 come from edge i).
DirectedGraph as_directed(const UndirectedGraph& g);

}  // namespace divsol
