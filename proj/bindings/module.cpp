#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "divsol/brute_force.hpp"
#include "divsol/diverse_matching.hpp"
#include "divsol/diverse_paths.hpp"
#include "divsol/diversity.hpp"
#include "divsol/io.hpp"
#include "divsol/matroid.hpp"
#include "divsol/yen.hpp"

namespace py = pybind11;
using namespace divsol;

namespace {

DirectedGraph make_directed(
    int n, const std::vector<std::tuple<int, int, Length, Weight>>& arcs) {
  DirectedGraph g;
  g.n = n;
  for (const auto& [u, v, length, weight] : arcs) {
    g.arcs.push_back({u, v, length, weight});
  }
  validate(g);
  return g;
}

UndirectedGraph make_undirected(
    int n, const std::vector<std::tuple<int, int, Length, Weight>>& edges) {
  UndirectedGraph g;
  g.n = n;
  for (const auto& [u, v, length, weight] : edges) {
    g.edges.push_back({u, v, length, weight});
  }
  validate(g);
  return g;
}

BipartiteGraph make_bipartite(
    int left, int right, const std::vector<std::tuple<int, int, Weight>>& edges) {
  BipartiteGraph g;
  g.left_count = left;
  g.right_count = right;
  for (const auto& [a, b, weight] : edges) g.edges.push_back({a, b, weight});
  validate(g);
  return g;
}

DiverseBasesResult diverse_spanning_trees(const UndirectedGraph& g, int k) {
  const GraphicMatroid matroid(g);
  std::vector<Weight> weights;
  for (const Edge& e : g.edges) weights.push_back(e.weight);
  return weighted_diverse_bases(matroid, weights, k);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Diverse shortest st-paths, spanning trees, and bipartite "
            "matchings maximizing the pairwise weighted Hamming diversity.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError",
                                          PyExc_RuntimeError);

  py::class_<DirectedGraph>(m, "DirectedGraph")
      .def(py::init(&make_directed), py::arg("n"), py::arg("arcs"))
      .def_readonly("n", &DirectedGraph::n)
      .def_property_readonly("arcs", [](const DirectedGraph& g) {
        std::vector<std::tuple<int, int, Length, Weight>> out;
        for (const Arc& a : g.arcs) {
          out.emplace_back(a.tail, a.head, a.length, a.weight);
        }
        return out;
      });

  py::class_<UndirectedGraph>(m, "UndirectedGraph")
      .def(py::init(&make_undirected), py::arg("n"), py::arg("edges"))
      .def_readonly("n", &UndirectedGraph::n)
      .def_property_readonly("edges", [](const UndirectedGraph& g) {
        std::vector<std::tuple<int, int, Length, Weight>> out;
        for (const Edge& e : g.edges) {
          out.emplace_back(e.u, e.v, e.length, e.weight);
        }
        return out;
      });

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def(py::init(&make_bipartite), py::arg("left"), py::arg("right"),
           py::arg("edges"))
      .def_readonly("left_count", &BipartiteGraph::left_count)
      .def_readonly("right_count", &BipartiteGraph::right_count)
      .def_property_readonly("edges", [](const BipartiteGraph& g) {
        std::vector<std::tuple<int, int, Weight>> out;
        for (const BipartiteEdge& e : g.edges) {
          out.emplace_back(e.a, e.b, e.weight);
        }
        return out;
      });

  py::class_<SolutionSet>(m, "SolutionSet")
      .def_readonly("sets", &SolutionSet::sets)
      .def_readonly("multiplicity", &SolutionSet::multiplicity)
      .def_readonly("diversity", &SolutionSet::diversity);

  py::class_<DiversePathsResult>(m, "DiversePathsResult")
      .def_readonly("paths", &DiversePathsResult::paths)
      .def_readonly("solutions", &DiversePathsResult::solutions)
      .def_readonly("packing_weight", &DiversePathsResult::packing_weight);

  py::class_<DiverseMatchingsResult>(m, "DiverseMatchingsResult")
      .def_readonly("solutions", &DiverseMatchingsResult::solutions)
      .def_readonly("packing_weight", &DiverseMatchingsResult::packing_weight);

  py::class_<DiverseBasesResult>(m, "DiverseBasesResult")
      .def_readonly("solutions", &DiverseBasesResult::solutions)
      .def_readonly("packing_weight", &DiverseBasesResult::packing_weight)
      .def_readonly("oracle_queries", &DiverseBasesResult::oracle_queries);

  py::class_<PathResult>(m, "PathResult")
      .def_readonly("vertices", &PathResult::vertices)
      .def_readonly("edges", &PathResult::edges)
      .def_readonly("length", &PathResult::length);

  m.def("generate_grid",
        [](int side) {
          GridInstance grid = generate_grid(side);
          return py::make_tuple(std::move(grid.graph), grid.source, grid.sink);
        },
        py::arg("side"), "Unit p x p grid; returns (graph, source, sink).");

  m.def("parse_dimacs",
        [](const std::string& text, bool round100, bool unit_weights) {
          return parse_dimacs_gr(text, DimacsOptions{round100, unit_weights});
        },
        py::arg("text"), py::arg("round100") = false,
        py::arg("unit_weights") = false);
  m.def("parse_snap",
        [](const std::string& text) { return parse_snap_edgelist(text); },
        py::arg("text"));
  m.def("parse_undirected",
        [](const std::string& text) { return parse_undirected_edgelist(text); },
        py::arg("text"));
  m.def("parse_bipartite",
        [](const std::string& text) { return parse_bipartite_edgelist(text); },
        py::arg("text"));

  m.def("diverse_shortest_paths",
        py::overload_cast<const DirectedGraph&, int, int, int>(
            &diverse_shortest_paths),
        py::arg("graph"), py::arg("source"), py::arg("sink"), py::arg("k"));
  m.def("diverse_shortest_paths",
        py::overload_cast<const UndirectedGraph&, int, int, int>(
            &diverse_shortest_paths),
        py::arg("graph"), py::arg("source"), py::arg("sink"), py::arg("k"));

  m.def("diverse_bipartite_matchings", &diverse_bipartite_matchings,
        py::arg("graph"), py::arg("k"), py::arg("cardinality"));

  m.def("diverse_spanning_trees", &diverse_spanning_trees, py::arg("graph"),
        py::arg("k"));

  m.def("yen_k_shortest",
        py::overload_cast<const DirectedGraph&, int, int, int>(&yen_k_shortest),
        py::arg("graph"), py::arg("source"), py::arg("sink"), py::arg("k"));
  m.def("yen_k_shortest",
        py::overload_cast<const UndirectedGraph&, int, int, int>(
            &yen_k_shortest),
        py::arg("graph"), py::arg("source"), py::arg("sink"), py::arg("k"));

  m.def("copy_weight", &copy_weight, py::arg("weight"), py::arg("k"),
        py::arg("copy_index"));
  m.def("diversity_pairwise",
        [](const std::vector<ElementSet>& sets,
           const std::vector<Weight>& weights) {
          return diversity_pairwise(sets, weights);
        },
        py::arg("sets"), py::arg("weights"));
  m.def("diversity_multiplicity",
        [](const std::vector<ElementSet>& sets,
           const std::vector<Weight>& weights) {
          return diversity_multiplicity(sets, weights);
        },
        py::arg("sets"), py::arg("weights"));
}
