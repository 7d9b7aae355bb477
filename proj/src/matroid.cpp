#include "divsol/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace divsol {

int IndependenceOracle::rank() const {
  std::vector<int> current;
  for (int e = 0; e < ground_size_; ++e) {
    current.push_back(e);
    if (!is_independent(current)) current.pop_back();
  }
  return static_cast<int>(current.size());
}

GraphicMatroid::GraphicMatroid(UndirectedGraph g)
    : IndependenceOracle(static_cast<int>(g.edges.size())),
      graph_(std::move(g)) {
  validate(graph_);
}

namespace {

// Plain union-find, path halving.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns false when x and y were already connected.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

bool GraphicMatroid::independent(const std::vector<int>& elements) const {
  UnionFind uf(graph_.n);
  for (int e : elements) {
    const Edge& edge = graph_.edges[e];
    if (!uf.unite(edge.u, edge.v)) return false;
  }
  return true;
}

UniformMatroid::UniformMatroid(int ground_size, int max_rank)
    : IndependenceOracle(ground_size), max_rank_(max_rank) {
  if (max_rank < 0 || max_rank > ground_size) {
    throw std::invalid_argument("uniform matroid rank must be in [0, n]");
  }
}

bool UniformMatroid::independent(const std::vector<int>& elements) const {
  return static_cast<int>(elements.size()) <= max_rank_;
}

CopiedMatroid::CopiedMatroid(const IndependenceOracle& base, int k)
    : base_(&base), k_(k) {
  if (k < 1) throw std::invalid_argument("copy count must be positive");
}

bool CopiedMatroid::independent(const std::vector<int>& copy_ids) const {
  std::vector<int> projection;
  projection.reserve(copy_ids.size());
  for (int cid : copy_ids) projection.push_back(decode(cid).element);
  std::sort(projection.begin(), projection.end());
  if (std::adjacent_find(projection.begin(), projection.end()) !=
      projection.end()) {
    return false;  // two copies of one element
  }
  return base_->is_independent(projection);
}

std::size_t BasePartition::total_size() const {
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  return total;
}

namespace {

bool fits_into_part(const CopiedMatroid& matroid, const std::vector<int>& part,
                    int candidate) {
  std::vector<int> extended = part;
  extended.push_back(candidate);
  return matroid.independent(extended);
}

bool fits_replacing(const CopiedMatroid& matroid, const std::vector<int>& part,
                    int removed, int candidate) {
  std::vector<int> exchanged;
  exchanged.reserve(part.size());
  for (int cid : part) {
    if (cid != removed) exchanged.push_back(cid);
  }
  exchanged.push_back(candidate);
  return matroid.independent(exchanged);
}

}  // namespace

bool matroid_partition_augment(const CopiedMatroid& matroid,
                               BasePartition& partition, int candidate) {
  const int k = static_cast<int>(partition.parts.size());
  // part_of: current part of every selected copy id, -1 when unselected.
  std::vector<int> part_of(matroid.ground_size(), -1);
  for (int j = 0; j < k; ++j) {
    for (int cid : partition.parts[j]) part_of[cid] = j;
  }
  if (part_of[candidate] != -1) {
    throw std::invalid_argument("candidate already selected");
  }

  // Breadth-first search over the exchange digraph: an arc y -> z means y can
  // take z's slot in z's part. The first element that fits into some part
  // directly closes a shortest augmenting sequence, which keeps every part
  // independent after the swaps are applied back-to-front.
  std::vector<int> parent(matroid.ground_size(), -1);
  std::vector<char> visited(matroid.ground_size(), 0);
  std::vector<int> queue{candidate};
  visited[candidate] = 1;
  int fit_element = -1;
  int fit_part = -1;
  for (std::size_t head = 0; head < queue.size() && fit_element < 0; ++head) {
    const int y = queue[head];
    for (int j = 0; j < k && fit_element < 0; ++j) {
      if (j == part_of[y]) continue;
      if (fits_into_part(matroid, partition.parts[j], y)) {
        fit_element = y;
        fit_part = j;
        break;
      }
      for (int z : partition.parts[j]) {
        if (visited[z]) continue;
        if (fits_replacing(matroid, partition.parts[j], z, y)) {
          visited[z] = 1;
          parent[z] = y;
          queue.push_back(z);
        }
      }
    }
  }
  if (fit_element < 0) return false;

  // Unwind: move the tail element into its free part, then walk the parent
  // chain letting each predecessor take the vacated slot.
  int element = fit_element;
  int destination = fit_part;
  while (element >= 0) {
    const int origin = part_of[element];
    if (origin >= 0) {
      auto& part = partition.parts[origin];
      part.erase(std::find(part.begin(), part.end(), element));
    }
    partition.parts[destination].push_back(element);
    part_of[element] = destination;
    destination = origin;
    element = parent[element];
  }
  for (const auto& part : partition.parts) {
    if (!matroid.independent(part)) {
      throw std::logic_error("partition augmentation broke independence");
    }
  }
  return true;
}

DiverseBasesResult weighted_diverse_bases(const IndependenceOracle& matroid,
                                          std::span<const Weight> weights,
                                          int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (static_cast<int>(weights.size()) != matroid.ground_size()) {
    throw std::invalid_argument("weight vector size differs from ground set");
  }
  validate_weight_bound(weights, k);
  const std::int64_t queries_before = matroid.query_count();
  const int rank = matroid.rank();
  if (rank < 1) {
    throw std::invalid_argument("matroid rank must be at least 1");
  }

  const CopiedMatroid copied(matroid, k);
  // Copy-weight descending; ties by element id then copy index, so copies of
  // one element are always visited in index order.
  std::vector<int> order(copied.ground_size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const CopiedElement ca = copied.decode(a);
    const CopiedElement cb = copied.decode(b);
    const std::int64_t wa = copy_weight(weights[ca.element], k, ca.copy_index);
    const std::int64_t wb = copy_weight(weights[cb.element], k, cb.copy_index);
    if (wa != wb) return wa > wb;
    if (ca.element != cb.element) return ca.element < cb.element;
    return ca.copy_index < cb.copy_index;
  });

  BasePartition partition;
  partition.parts.assign(k, {});
  const std::size_t target = static_cast<std::size_t>(k) * rank;
  std::int64_t packing_weight = 0;
  for (int cid : order) {
    if (partition.total_size() == target) break;
    if (matroid_partition_augment(copied, partition, cid)) {
      const CopiedElement ce = copied.decode(cid);
      packing_weight += copy_weight(weights[ce.element], k, ce.copy_index);
    }
  }
  if (partition.total_size() != target) {
    throw std::logic_error("matroid union greedy fell short of k bases");
  }

  std::vector<ElementSet> bases;
  bases.reserve(k);
  for (const auto& part : partition.parts) {
    ElementSet base;
    base.reserve(part.size());
    for (int cid : part) base.push_back(copied.decode(cid).element);
    bases.push_back(std::move(base));
  }
  DiverseBasesResult result;
  result.solutions = make_solution_set(std::move(bases), weights);
  result.packing_weight = packing_weight;
  result.oracle_queries = matroid.query_count() - queries_before;
  if (result.packing_weight != result.solutions.diversity) {
    throw std::logic_error("packing weight disagrees with base diversity");
  }
  return result;
}

}  // namespace divsol
