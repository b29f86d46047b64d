#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gencomp/words.hpp"

namespace gencomp {

/// Outcome of one verification sweep: how many individual checks held.
struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;  // first few failing cases, readable

  bool ok() const { return passed == total; }
};

/// Known suite names, in the order the default run executes them.
const std::vector<std::string_view>& suite_names();

/// Runs one suite. `bound` overrides the suite's sweep bound (its meaning is
/// per suite: n, n+k, or N). Throws std::invalid_argument for unknown names.
SuiteResult run_suite(std::string_view name,
                      std::optional<std::size_t> bound = std::nullopt,
                      std::uint64_t budget = kDefaultEnumerationBudget);

/// Deterministic pseudo-random seeds with entries in 0..3.
std::vector<std::vector<Integer>> random_small_seeds(std::size_t count,
                                                     std::size_t length,
                                                     std::uint64_t rng_seed);

}  // namespace gencomp
