#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace divsol {

// Input text that does not follow the expected grammar.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// The requested solution does not exist: unreachable sink, flow short of the
// requirement, not enough disjoint structures. Carries the best achievable
// value where the failing operation knows it (-1 otherwise).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what, std::int64_t achieved = -1)
      : std::runtime_error(what), achieved_(achieved) {}

  std::int64_t achieved() const noexcept { return achieved_; }

 private:
  std::int64_t achieved_;
};

}  // namespace divsol
