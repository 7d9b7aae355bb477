#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "divsol/diversity.hpp"
#include "divsol/graph.hpp"

namespace divsol {

// Independence oracle over ground set {0, ..., ground_size-1}. Implementations
// must be reentrant; the query counter is the only (atomic) mutation behind
// the const surface.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  int ground_size() const { return ground_size_; }

  bool is_independent(const std::vector<int>& elements) const {
    queries_.fetch_add(1, std::memory_order_relaxed);
    return independent(elements);
  }

  // Common size of the maximal independent sets, by one greedy sweep.
  int rank() const;

  std::int64_t query_count() const {
    return queries_.load(std::memory_order_relaxed);
  }

 protected:
  explicit IndependenceOracle(int ground_size) : ground_size_(ground_size) {}

  virtual bool independent(const std::vector<int>& elements) const = 0;

 private:
  int ground_size_ = 0;
  mutable std::atomic<std::int64_t> queries_{0};
};

// Element sets indexing g.edges; independent iff acyclic (union-find check).
class GraphicMatroid final : public IndependenceOracle {
 public:
  explicit GraphicMatroid(UndirectedGraph g);

  const UndirectedGraph& graph() const { return graph_; }

 protected:
  bool independent(const std::vector<int>& elements) const override;

 private:
  UndirectedGraph graph_;
};

// Independent iff |F| <= r.
class UniformMatroid final : public IndependenceOracle {
 public:
  UniformMatroid(int ground_size, int max_rank);

 protected:
  bool independent(const std::vector<int>& elements) const override;

 private:
  int max_rank_ = 0;
};

struct CopiedElement {
  int element = 0;
  int copy_index = 1;  // 1-based
};

// The k-copied matroid: a set of copies is independent iff it holds at most
// one copy per element and its projection is independent in the base matroid.
class CopiedMatroid {
 public:
  CopiedMatroid(const IndependenceOracle& base, int k);

  int copies() const { return k_; }
  int ground_size() const { return base_->ground_size() * k_; }
  int id(int element, int copy_index) const {
    return element * k_ + (copy_index - 1);
  }
  CopiedElement decode(int copy_id) const {
    return {copy_id / k_, copy_id % k_ + 1};
  }

  bool independent(const std::vector<int>& copy_ids) const;
  const IndependenceOracle& base() const { return *base_; }

 private:
  const IndependenceOracle* base_;
  int k_ = 0;
};

// k mutually disjoint independent sets of the copied matroid.
struct BasePartition {
  std::vector<std::vector<int>> parts;  // copy ids

  std::size_t total_size() const;
};

// Absorbs the candidate copy into the partition if any exchange sequence
// allows it (breadth-first search over the exchange digraph; elements may
// migrate between parts). Returns false leaving the partition unchanged when
// the selected set plus the candidate is not partitionable.
bool matroid_partition_augment(const CopiedMatroid& matroid,
                               BasePartition& partition, int candidate);

struct DiverseBasesResult {
  SolutionSet solutions;            // element-id sets, one per base
  std::int64_t packing_weight = 0;  // equals solutions.diversity
  std::int64_t oracle_queries = 0;
};

// k bases maximizing the pairwise weighted Hamming diversity: greedy over all
// element copies in copy-weight-descending order, absorbing each extendable
// copy by partition augmentation until k * rank copies are selected.
DiverseBasesResult weighted_diverse_bases(const IndependenceOracle& matroid,
                                          std::span<const Weight> weights,
                                          int k);

}  // namespace divsol
