#include "divsol/diverse_matching.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace divsol {

void validate(const BipartiteGraph& g) {
  if (g.left_count < 0 || g.right_count < 0 ||
      g.left_count > kMaxVertices || g.right_count > kMaxVertices) {
    throw std::invalid_argument("bipartite side size out of range");
  }
  for (const BipartiteEdge& e : g.edges) {
    if (e.a < 0 || e.a >= g.left_count || e.b < 0 || e.b >= g.right_count) {
      throw std::invalid_argument("bipartite edge endpoint out of range");
    }
    if (e.weight < 0) {
      throw std::invalid_argument(
          "negative edge weight rejected (diversity reduction requires w >= 0)");
    }
  }
}

BipartiteGraph parse_bipartite_edgelist(std::string_view text) {
  BipartiteGraph g;
  std::int64_t declared_edges = -1;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind) || kind[0] == '#') continue;
    if (kind == "b") {
      if (declared_edges >= 0) throw ParseError("duplicate header line");
      std::int64_t m = -1;
      if (!(tokens >> g.left_count >> g.right_count >> m) || m < 0 ||
          g.left_count < 0 || g.right_count < 0) {
        throw ParseError("malformed header, expected 'b <|A|> <|B|> <m>'");
      }
      declared_edges = m;
    } else if (kind == "e") {
      if (declared_edges < 0) throw ParseError("edge line before header");
      BipartiteEdge e;
      if (!(tokens >> e.a >> e.b >> e.weight)) {
        throw ParseError("malformed edge line, expected 'e <a> <b> <w>'");
      }
      if (e.a < 0 || e.a >= g.left_count || e.b < 0 || e.b >= g.right_count) {
        throw ParseError("bipartite vertex id out of range");
      }
      if (e.weight < 0) throw ParseError("negative edge weight");
      g.edges.push_back(e);
    } else {
      throw ParseError("unrecognized line type '" + kind + "'");
    }
    std::string trailing;
    if (tokens >> trailing) throw ParseError("trailing tokens on line");
  }
  if (declared_edges < 0) throw ParseError("missing header line");
  if (static_cast<std::int64_t>(g.edges.size()) != declared_edges) {
    throw ParseError("edge count mismatch: declared " +
                     std::to_string(declared_edges) + ", parsed " +
                     std::to_string(g.edges.size()));
  }
  return g;
}

FlowNetwork build_matching_network(const BipartiteGraph& g, int k,
                                   int cardinality) {
  if (k < 1 || cardinality < 1) {
    throw std::invalid_argument("k and cardinality must be positive");
  }
  validate(g);
  FlowNetwork net;
  net.n = g.left_count + g.right_count + 2;
  net.source = 0;
  net.sink = net.n - 1;
  const auto left_id = [](int a) { return 1 + a; };
  const auto right_id = [&g](int b) { return 1 + g.left_count + b; };
  for (int a = 0; a < g.left_count; ++a) {
    net.arcs.push_back({net.source, left_id(a), k, 0, ArcTag{}});
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    for (int copy = 1; copy <= k; ++copy) {
      net.arcs.push_back({left_id(g.edges[e].a), right_id(g.edges[e].b), 1,
                          -copy_weight(g.edges[e].weight, k, copy),
                          ArcTag{static_cast<int>(e), copy}});
    }
  }
  for (int b = 0; b < g.right_count; ++b) {
    net.arcs.push_back({right_id(b), net.sink, k, 0, ArcTag{}});
  }
  return net;
}

namespace {

void check_degrees(const DegreeBoundedSubgraph& subgraph, int k) {
  std::vector<int> left_degree(subgraph.left_count, 0);
  std::vector<int> right_degree(subgraph.right_count, 0);
  for (const EdgeInstance& e : subgraph.edges) {
    if (e.a < 0 || e.a >= subgraph.left_count || e.b < 0 ||
        e.b >= subgraph.right_count) {
      throw std::invalid_argument("edge instance endpoint out of range");
    }
    if (++left_degree[e.a] > k || ++right_degree[e.b] > k) {
      throw std::invalid_argument("vertex degree exceeds the color count");
    }
  }
}

}  // namespace

std::vector<int> bipartite_edge_color(const DegreeBoundedSubgraph& subgraph,
                                      int k) {
  if (k < 1) throw std::invalid_argument("color count must be positive");
  check_degrees(subgraph, k);

  // at_left[a][c] / at_right[b][c]: instance currently colored c at that
  // vertex, -1 when free. Colors are 0-based internally, 1-based outside.
  std::vector<std::vector<int>> at_left(subgraph.left_count,
                                        std::vector<int>(k, -1));
  std::vector<std::vector<int>> at_right(subgraph.right_count,
                                         std::vector<int>(k, -1));
  std::vector<int> color(subgraph.edges.size(), -1);

  const auto lowest_free = [k](const std::vector<int>& used) {
    for (int c = 0; c < k; ++c) {
      if (used[c] < 0) return c;
    }
    return -1;
  };

  for (std::size_t i = 0; i < subgraph.edges.size(); ++i) {
    const EdgeInstance& e = subgraph.edges[i];
    int assigned = -1;
    for (int c = 0; c < k; ++c) {
      if (at_left[e.a][c] < 0 && at_right[e.b][c] < 0) {
        assigned = c;
        break;
      }
    }
    if (assigned < 0) {
      // No common free color: take alpha free at a, beta free at b, and flip
      // the maximal alternating alpha/beta path starting at b. Bipartite
      // parity means the path can only reach a through an alpha edge, and a
      // has none, so alpha opens up at b while staying free at a.
      const int alpha = lowest_free(at_left[e.a]);
      const int beta = lowest_free(at_right[e.b]);
      if (alpha < 0 || beta < 0) {
        throw std::logic_error("no free color at an endpoint");
      }
      std::vector<int> chain;
      int vertex = e.b;
      bool on_right = true;
      int want = alpha;
      while (true) {
        const int instance =
            on_right ? at_right[vertex][want] : at_left[vertex][want];
        if (instance < 0) break;
        chain.push_back(instance);
        const EdgeInstance& walk = subgraph.edges[instance];
        vertex = on_right ? walk.a : walk.b;
        on_right = !on_right;
        want = want == alpha ? beta : alpha;
      }
      for (int instance : chain) {  // clear, then re-register swapped
        const EdgeInstance& walk = subgraph.edges[instance];
        at_left[walk.a][color[instance]] = -1;
        at_right[walk.b][color[instance]] = -1;
        color[instance] = color[instance] == alpha ? beta : alpha;
      }
      for (int instance : chain) {
        const EdgeInstance& walk = subgraph.edges[instance];
        at_left[walk.a][color[instance]] = instance;
        at_right[walk.b][color[instance]] = instance;
      }
      assigned = alpha;
    }
    color[i] = assigned;
    at_left[e.a][assigned] = static_cast<int>(i);
    at_right[e.b][assigned] = static_cast<int>(i);
  }

  // Every color must appear when there are at least k edges: an unused color
  // is free at every vertex, so the lowest edge of any twice-used color can
  // move to it.
  if (subgraph.edges.size() >= static_cast<std::size_t>(k)) {
    std::vector<int> usage(k, 0);
    for (int c : color) ++usage[c];
    for (int missing = 0; missing < k; ++missing) {
      if (usage[missing] > 0) continue;
      int donor = -1;
      for (std::size_t i = 0; i < color.size(); ++i) {
        if (usage[color[i]] >= 2) {
          donor = static_cast<int>(i);
          break;
        }
      }
      if (donor < 0) throw std::logic_error("no donor color found");
      const EdgeInstance& e = subgraph.edges[donor];
      --usage[color[donor]];
      at_left[e.a][color[donor]] = -1;
      at_right[e.b][color[donor]] = -1;
      color[donor] = missing;
      at_left[e.a][missing] = donor;
      at_right[e.b][missing] = donor;
      ++usage[missing];
    }
  }

  for (int& c : color) ++c;  // report colors as 1..k
  return color;
}

std::vector<std::vector<int>> rebalance_matchings(
    std::vector<std::vector<int>> matchings, int cardinality,
    const DegreeBoundedSubgraph& subgraph) {
  const int k = static_cast<int>(matchings.size());
  std::size_t total = 0;
  for (const auto& m : matchings) total += m.size();
  if (total != static_cast<std::size_t>(k) * cardinality) {
    throw std::invalid_argument(
        "matchings must hold exactly k * cardinality edges");
  }

  while (true) {
    int largest = 0, smallest = 0;
    for (int i = 1; i < k; ++i) {
      if (matchings[i].size() > matchings[largest].size()) largest = i;
      if (matchings[i].size() < matchings[smallest].size()) smallest = i;
    }
    if (matchings[largest].size() == matchings[smallest].size()) break;

    // Incidence of the two classes; degree <= 1 per class at every vertex.
    const auto incidence = [&](const std::vector<int>& matching) {
      std::pair<std::vector<int>, std::vector<int>> at{
          std::vector<int>(subgraph.left_count, -1),
          std::vector<int>(subgraph.right_count, -1)};
      for (int instance : matching) {
        at.first[subgraph.edges[instance].a] = instance;
        at.second[subgraph.edges[instance].b] = instance;
      }
      return at;
    };
    const auto [large_left, large_right] = incidence(matchings[largest]);
    const auto [small_left, small_right] = incidence(matchings[smallest]);

    // An alternating walk from a vertex covered by the larger class only;
    // it augments exactly when it closes on a larger-class edge.
    const auto walk_from = [&](int start, bool start_left,
                               std::vector<int>& path) {
      path.clear();
      int vertex = start;
      bool on_left = start_left;
      bool want_large = true;
      while (true) {
        const int instance =
            want_large ? (on_left ? large_left[vertex] : large_right[vertex])
                       : (on_left ? small_left[vertex] : small_right[vertex]);
        if (instance < 0) break;
        path.push_back(instance);
        const EdgeInstance& e = subgraph.edges[instance];
        vertex = on_left ? e.b : e.a;
        on_left = !on_left;
        want_large = !want_large;
      }
      return !path.empty() && path.size() % 2 == 1;
    };

    std::vector<int> path;
    bool found = false;
    for (int a = 0; a < subgraph.left_count && !found; ++a) {
      if (large_left[a] >= 0 && small_left[a] < 0) {
        found = walk_from(a, true, path);
      }
    }
    for (int b = 0; b < subgraph.right_count && !found; ++b) {
      if (large_right[b] >= 0 && small_right[b] < 0) {
        found = walk_from(b, false, path);
      }
    }
    if (!found) {
      throw std::logic_error("no augmenting path between matching classes");
    }

    // Swap class membership along the path: the larger class sheds one edge.
    std::vector<char> on_path(subgraph.edges.size(), 0);
    for (int instance : path) on_path[instance] = 1;
    std::vector<int> new_large, new_small;
    for (int instance : matchings[largest]) {
      if (!on_path[instance]) new_large.push_back(instance);
    }
    for (int instance : matchings[smallest]) {
      if (!on_path[instance]) new_small.push_back(instance);
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      (i % 2 == 0 ? new_small : new_large).push_back(path[i]);
    }
    matchings[largest] = std::move(new_large);
    matchings[smallest] = std::move(new_small);
  }
  return matchings;
}

DiverseMatchingsResult diverse_bipartite_matchings(const BipartiteGraph& g,
                                                   int k, int cardinality) {
  if (k < 1 || cardinality < 1) {
    throw std::invalid_argument("k and cardinality must be positive");
  }
  validate(g);
  std::vector<Weight> weights;
  weights.reserve(g.edges.size());
  for (const BipartiteEdge& e : g.edges) weights.push_back(e.weight);
  validate_weight_bound(weights, k);

  const FlowNetwork net = build_matching_network(g, k, cardinality);
  const std::int64_t requirement =
      static_cast<std::int64_t>(k) * cardinality;
  const IntegralFlow flow = min_cost_flow(net, requirement);

  DegreeBoundedSubgraph selected;
  selected.left_count = g.left_count;
  selected.right_count = g.right_count;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const ArcTag& tag = net.arcs[i].tag;
    if (!tag.auxiliary() && flow.arc_flow[i] == 1) {
      selected.edges.push_back(
          {tag.element, g.edges[tag.element].a, g.edges[tag.element].b});
    }
  }

  const std::vector<int> coloring = bipartite_edge_color(selected, k);
  std::vector<std::vector<int>> classes(k);
  for (std::size_t i = 0; i < coloring.size(); ++i) {
    classes[coloring[i] - 1].push_back(static_cast<int>(i));
  }
  classes = rebalance_matchings(std::move(classes), cardinality, selected);

  std::vector<ElementSet> matchings;
  matchings.reserve(k);
  for (const auto& cls : classes) {
    ElementSet edge_ids;
    edge_ids.reserve(cls.size());
    for (int instance : cls) edge_ids.push_back(selected.edges[instance].edge);
    matchings.push_back(std::move(edge_ids));
  }

  DiverseMatchingsResult result;
  result.solutions = make_solution_set(std::move(matchings), weights);
  result.packing_weight = -flow.cost;
  if (result.packing_weight != result.solutions.diversity) {
    throw std::logic_error("packing weight disagrees with matching diversity");
  }
  return result;
}

}  // namespace divsol
