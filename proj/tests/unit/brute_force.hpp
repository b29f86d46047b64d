#pragma once

// Test-only oracles. Plain machine-integer enumeration, sharing no code with
// the library paths they check.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gencomp::testing {

/// Words over {0..alphabet-1} of the given length, as digit strings.
inline std::vector<std::string> all_words(unsigned alphabet,
                                          std::size_t length) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      for (unsigned c = 0; c < alphabet; ++c) {
        next.push_back(w + static_cast<char>('0' + c));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::uint64_t count_if_words(
    unsigned alphabet, std::size_t length,
    const std::function<bool(const std::string&)>& keep) {
  std::uint64_t total = 0;
  for (const auto& w : all_words(alphabet, length)) total += keep(w) ? 1 : 0;
  return total;
}

inline std::size_t occurrences(const std::string& w, char c) {
  std::size_t n = 0;
  for (char x : w) n += (x == c) ? 1 : 0;
  return n;
}

/// Sum over compositions (i_1..i_k) of n of prod weight(i_t); weight is
/// 1-based.
inline std::int64_t weighted_compositions(
    const std::vector<std::int64_t>& weight, int n, int k) {
  if (k == 0) return n == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (int first = 1; first <= n - k + 1; ++first) {
    total += weight[first - 1] * weighted_compositions(weight, n - first, k - 1);
  }
  return total;
}

/// Binomial coefficient in machine integers, small arguments only.
inline std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace gencomp::testing
