#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gencomp/integer.hpp"
#include "gencomp/sequences.hpp"

namespace gencomp {

/// The array c_m(n,k) for 1 <= k <= n <= N, stored row by row.
///
/// c(0,0) = 1 and c(n,0) = 0 for n >= 1 are conventions answered by value()
/// but not stored.
class CompositionTriangle {
 public:
  /// Takes rows in order; row n must hold exactly n entries.
  CompositionTriangle(unsigned m, std::vector<std::vector<Count>> rows);

  unsigned m() const { return m_; }
  std::size_t order() const { return order_; }

  /// Stored entry, 1 <= k <= n <= order(). Throws std::out_of_range.
  const Count& operator()(std::size_t n, std::size_t k) const;

  /// Entry including conventions: c(0,0)=1, c(n,0)=0, c(n,k>n)=0.
  Count value(std::size_t n, std::size_t k) const;

  std::span<const Count> row(std::size_t n) const;

  friend bool operator==(const CompositionTriangle& a,
                         const CompositionTriangle& b) {
    return a.m_ == b.m_ && a.order_ == b.order_ && a.entries_ == b.entries_;
  }

 private:
  static std::size_t offset(std::size_t n) { return n * (n - 1) / 2; }

  unsigned m_;
  std::size_t order_;
  std::vector<Count> entries_;
};

enum class Algorithm { Recurrence, Convolution, Bell, Pascal };

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::Recurrence, Algorithm::Convolution, Algorithm::Bell,
    Algorithm::Pascal};

std::string_view algorithm_name(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view name);

// Each builder takes the seed f0 and derives the weights f_{m-1} itself.
// They throw InsufficientSeedError when order exceeds the seed length and
// std::invalid_argument when m == 0 or order == 0.

/// c(n,k) = sum_{i=1}^{n-k+1} f_{m-1}(i) c(n-i,k-1).
CompositionTriangle triangle_recurrence(const ArithmeticFunction& f0,
                                        unsigned m, std::size_t order);

/// c(n,k) = [x^n] (sum_i f_{m-1}(i) x^i)^k by repeated truncated polynomial
/// multiplication.
CompositionTriangle triangle_convolution(const ArithmeticFunction& f0,
                                         unsigned m, std::size_t order);

/// c(n,k) = k!/n! B_{n,k}(1! f_{m-1}(1), 2! f_{m-1}(2), ...).
CompositionTriangle triangle_bell(const ArithmeticFunction& f0, unsigned m,
                                  std::size_t order);

/// c_m(n,k) = sum_{i=k}^{n} (m-1)^{i-k} C(i-1,k-1) c_1(n,i).
CompositionTriangle triangle_pascal(const ArithmeticFunction& f0, unsigned m,
                                    std::size_t order);

CompositionTriangle build_triangle(Algorithm algo, const ArithmeticFunction& f0,
                                   unsigned m, std::size_t order);

/// Same constructions with the weights supplied directly (the role of
/// f_{m-1}); the result is labelled with m.
CompositionTriangle recurrence_from_weights(const ArithmeticFunction& weights,
                                            unsigned m, std::size_t order);
CompositionTriangle convolution_from_weights(const ArithmeticFunction& weights,
                                             unsigned m, std::size_t order);
CompositionTriangle bell_from_weights(const ArithmeticFunction& weights,
                                      unsigned m, std::size_t order);

/// c_{m+1}(n,k) = sum_{i=k}^{n} C(i-1,k-1) c_m(n,i).
CompositionTriangle step_up(const CompositionTriangle& previous);

Count row_sum(const CompositionTriangle& triangle, std::size_t n);

/// c(n+k, k) with f in the role of f_{m-1}.
Count extended_binomial(const ArithmeticFunction& f, std::size_t k,
                        std::size_t n);

}  // namespace gencomp
