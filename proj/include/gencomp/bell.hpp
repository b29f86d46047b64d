#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gencomp/integer.hpp"

namespace gencomp {

/// Arguments x_1, x_2, ... of a partial Bell polynomial (1-based).
class BellArguments {
 public:
  explicit BellArguments(std::vector<Integer> x);

  const Integer& operator()(std::size_t i) const;
  std::size_t size() const { return x_.size(); }
  std::span<const Integer> values() const { return x_; }

 private:
  std::vector<Integer> x_;
};

/// All B_{n,k}(x) for 0 <= k <= n <= order, built from
/// k B_{n,k} = sum_{i=1}^{n-k+1} C(n,i) x_i B_{n-i,k-1}.
class BellTable {
 public:
  BellTable(const BellArguments& x, std::size_t order);

  /// B_{n,k}; zero for k > n.
  const Integer& operator()(std::size_t n, std::size_t k) const;
  std::size_t order() const { return order_; }

 private:
  std::size_t order_;
  std::vector<Integer> table_;  // (order+1) x (order+1), row n, column k
};

/// B_{n,k}(x) for 0 <= k <= n <= x.size(). The division by k is checked and
/// throws InternalConsistencyError if inexact.
Integer partial_bell(const BellArguments& x, std::size_t n, std::size_t k);

/// With y the invert transform of x, checks for all 1 <= k <= n <= order
///   k! B_{n,k}(1!y_1, 2!y_2, ...) =
///       sum_{i=k}^{n} C(i-1,k-1) i! B_{n,i}(1!x_1, 2!x_2, ...).
bool bell_invert_identity_check(const BellArguments& x, std::size_t order);

}  // namespace gencomp
