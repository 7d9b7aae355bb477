#include "divsol/graph.hpp"

#include <stdexcept>
#include <string>

namespace divsol {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count out of range: " +
                                std::to_string(n));
  }
}

void check_endpoint(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument(std::string(what) + " id out of range: " +
                                std::to_string(v));
  }
}

void check_length_weight(Length length, Weight weight) {
  if (length < 1 || length > kMaxLength) {
    throw std::invalid_argument("edge length must be in [1, 2^31]: " +
                                std::to_string(length));
  }
  if (weight < 0) {
    throw std::invalid_argument(
        "negative edge weight rejected (diversity reduction requires w >= 0): " +
        std::to_string(weight));
  }
}

}  // namespace

void validate(const DirectedGraph& g) {
  check_vertex_count(g.n);
  for (const Arc& a : g.arcs) {
    check_endpoint(a.tail, g.n, "arc tail");
    check_endpoint(a.head, g.n, "arc head");
    check_length_weight(a.length, a.weight);
  }
}

void validate(const UndirectedGraph& g) {
  check_vertex_count(g.n);
  for (const Edge& e : g.edges) {
    check_endpoint(e.u, g.n, "edge endpoint");
    check_endpoint(e.v, g.n, "edge endpoint");
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop rejected in undirected graph at " +
                                  std::to_string(e.u));
    }
    check_length_weight(e.length, e.weight);
  }
}

GridInstance generate_grid(const GridSpec& spec) {
  const int p = spec.side;
  if (p < 2) {
    throw std::invalid_argument("grid side must be >= 2, got " +
                                std::to_string(p));
  }
  if (static_cast<std::int64_t>(p) * p > kMaxVertices) {
    throw std::invalid_argument("grid too large: " + std::to_string(p));
  }
  UndirectedGraph g;
  g.n = p * p;
  g.edges.reserve(static_cast<std::size_t>(2) * p * (p - 1));
  const auto id = [p](int row, int col) { return row * p + col; };
  for (int row = 0; row < p; ++row) {
    for (int col = 0; col < p; ++col) {
      if (col + 1 < p) g.edges.push_back({id(row, col), id(row, col + 1), 1, 1});
      if (row + 1 < p) g.edges.push_back({id(row, col), id(row + 1, col), 1, 1});
    }
  }
  return GridInstance{std::move(g), 0, p * p - 1};
}

GridInstance generate_grid(int side) { return generate_grid(GridSpec{side}); }

DirectedGraph as_directed(const UndirectedGraph& g) {
  DirectedGraph d;
  d.n = g.n;
  d.arcs.reserve(g.edges.size() * 2);
  for (const Edge& e : g.edges) {
    d.arcs.push_back({e.u, e.v, e.length, e.weight});
    d.arcs.push_back({e.v, e.u, e.length, e.weight});
  }
  return d;
}

}  // namespace divsol
