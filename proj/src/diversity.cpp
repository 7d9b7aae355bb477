#include "divsol/diversity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace divsol {

std::int64_t copy_weight(Weight element_weight, int k, int copy_index) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (copy_index < 1 || copy_index > k) {
    throw std::invalid_argument("copy index out of range [1, k]: " +
                                std::to_string(copy_index));
  }
  return element_weight * (k - 2 * static_cast<std::int64_t>(copy_index) + 1);
}

namespace {

std::int64_t symmetric_difference_weight(const ElementSet& a,
                                         const ElementSet& b,
                                         std::span<const Weight> weights) {
  std::int64_t total = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i, ++j;
    } else if (a[i] < b[j]) {
      total += weights[a[i++]];
    } else {
      total += weights[b[j++]];
    }
  }
  for (; i < a.size(); ++i) total += weights[a[i]];
  for (; j < b.size(); ++j) total += weights[b[j]];
  return total;
}

void check_elements(std::span<const ElementSet> sets,
                    std::size_t ground_size) {
  for (const ElementSet& s : sets) {
    for (int e : s) {
      if (e < 0 || static_cast<std::size_t>(e) >= ground_size) {
        throw std::invalid_argument("element id out of ground set: " +
                                    std::to_string(e));
      }
    }
  }
}

}  // namespace

std::int64_t diversity_pairwise(std::span<const ElementSet> sets,
                                std::span<const Weight> weights) {
  check_elements(sets, weights.size());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      total += symmetric_difference_weight(sets[i], sets[j], weights);
    }
  }
  return total;
}

std::vector<int> multiplicities(std::span<const ElementSet> sets,
                                int ground_size) {
  std::vector<int> count(ground_size, 0);
  for (const ElementSet& s : sets) {
    for (int e : s) ++count[e];
  }
  return count;
}

std::int64_t diversity_multiplicity(std::span<const ElementSet> sets,
                                    std::span<const Weight> weights) {
  check_elements(sets, weights.size());
  const auto count = multiplicities(sets, static_cast<int>(weights.size()));
  const std::int64_t k = static_cast<std::int64_t>(sets.size());
  std::int64_t total = 0;
  for (std::size_t e = 0; e < weights.size(); ++e) {
    total += weights[e] * count[e] * (k - count[e]);
  }
  return total;
}

void validate_weight_bound(std::span<const Weight> weights, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  constexpr std::int64_t kLimit = std::int64_t{1} << 62;
  std::int64_t total = 0;
  for (Weight w : weights) {
    if (w < 0) throw std::invalid_argument("negative weight in ground set");
    if (w > kLimit - total) {
      throw std::invalid_argument(
          "weight bound violated: k^2 * total weight must stay below 2^62");
    }
    total += w;
  }
  if (total > 0 && static_cast<std::int64_t>(k) * k > kLimit / total) {
    throw std::invalid_argument(
        "weight bound violated: k^2 * total weight must stay below 2^62");
  }
}

SolutionSet make_solution_set(std::vector<ElementSet> sets,
                              std::span<const Weight> weights) {
  for (ElementSet& s : sets) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw std::invalid_argument("solution subset contains a repeated element");
    }
  }
  SolutionSet result;
  result.diversity = diversity_pairwise(sets, weights);
  const std::int64_t check = diversity_multiplicity(sets, weights);
  if (check != result.diversity) {
    throw std::logic_error("diversity formulas disagree: pairwise " +
                           std::to_string(result.diversity) +
                           " vs multiplicity " + std::to_string(check));
  }
  result.multiplicity = multiplicities(sets, static_cast<int>(weights.size()));
  result.sets = std::move(sets);
  return result;
}

}  // namespace divsol
