#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "divsol/graph.hpp"

namespace divsol {

// An element subset as sorted, duplicate-free ids into the ground set.
using ElementSet = std::vector<int>;

// Weight of the i-th copy of an element: w * (k - 2i + 1). Non-increasing in
// the copy index; its prefix sums realize w * m * (k - m).
std::int64_t copy_weight(Weight element_weight, int k, int copy_index);

// Sum over all pairs of the weighted symmetric difference.
std::int64_t diversity_pairwise(std::span<const ElementSet> sets,
                                std::span<const Weight> weights);

// Same value through per-element multiplicities: sum_e w(e)*m(e)*(k-m(e)).
std::int64_t diversity_multiplicity(std::span<const ElementSet> sets,
                                    std::span<const Weight> weights);

// How many of the sets contain each element.
std::vector<int> multiplicities(std::span<const ElementSet> sets,
                                int ground_size);

// Overflow guard: rejects k^2 * sum(w) >= 2^62 so that every diversity and
// copy-cost accumulation fits in a signed 64-bit value.
void validate_weight_bound(std::span<const Weight> weights, int k);

struct SolutionSet {
  std::vector<ElementSet> sets;
  std::vector<int> multiplicity;  // indexed by element id
  std::int64_t diversity = 0;
};

// Sorts each subset, computes multiplicities, and evaluates the diversity by
// both formulas (throws std::logic_error if they disagree).
SolutionSet make_solution_set(std::vector<ElementSet> sets,
                              std::span<const Weight> weights);

}  // namespace divsol
