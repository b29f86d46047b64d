#include "gencomp/bell.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "gencomp/errors.hpp"
#include "gencomp/sequences.hpp"

namespace gencomp {

BellArguments::BellArguments(std::vector<Integer> x) : x_(std::move(x)) {
  if (x_.empty()) throw std::invalid_argument("Bell arguments must be nonempty");
}

const Integer& BellArguments::operator()(std::size_t i) const {
  if (i == 0 || i > x_.size()) {
    throw std::out_of_range("Bell argument index " + std::to_string(i));
  }
  return x_[i - 1];
}

BellTable::BellTable(const BellArguments& x, std::size_t order)
    : order_(order), table_((order + 1) * (order + 1)) {
  if (order > x.size()) {
    throw std::invalid_argument("Bell table order exceeds argument count");
  }
  const std::size_t stride = order + 1;
  table_[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      Integer acc = 0;
      for (std::size_t i = 1; i <= n - k + 1; ++i) {
        const Integer& lower = table_[(n - i) * stride + (k - 1)];
        if (lower == 0 || x(i) == 0) continue;
        acc += binomial(static_cast<std::int64_t>(n),
                        static_cast<std::int64_t>(i)) *
               x(i) * lower;
      }
      Integer quotient;
      Integer remainder;
      boost::multiprecision::divide_qr(acc, Integer(k), quotient, remainder);
      if (remainder != 0) {
        throw InternalConsistencyError(
            "partial Bell recurrence: inexact division by k at n=" +
            std::to_string(n) + ", k=" + std::to_string(k));
      }
      table_[n * stride + k] = std::move(quotient);
    }
  }
}

const Integer& BellTable::operator()(std::size_t n, std::size_t k) const {
  if (n > order_ || k > order_) throw std::out_of_range("Bell table index");
  return table_[n * (order_ + 1) + k];
}

Integer partial_bell(const BellArguments& x, std::size_t n, std::size_t k) {
  if (k > n || n > x.size()) {
    throw std::invalid_argument("partial_bell needs 0 <= k <= n <= len(x)");
  }
  return BellTable(x, n)(n, k);
}

bool bell_invert_identity_check(const BellArguments& x, std::size_t order) {
  if (order == 0) return true;
  if (x.size() < order) {
    throw std::invalid_argument("Bell identity check needs len(x) >= order");
  }
  const FactorialTable fact(order);
  const std::vector<Integer> head(x.values().begin(),
                                  x.values().begin() + order);
  const ArithmeticFunction y =
      invert_transform(ArithmeticFunction(head, "x"));

  std::vector<Integer> scaled_x(order);
  std::vector<Integer> scaled_y(order);
  for (std::size_t i = 1; i <= order; ++i) {
    scaled_x[i - 1] = fact(i) * x(i);
    scaled_y[i - 1] = fact(i) * y(i);
  }
  const BellTable bx(BellArguments(std::move(scaled_x)), order);
  const BellTable by(BellArguments(std::move(scaled_y)), order);

  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const Integer lhs = fact(k) * by(n, k);
      Integer rhs = 0;
      for (std::size_t i = k; i <= n; ++i) {
        rhs += binomial(static_cast<std::int64_t>(i - 1),
                        static_cast<std::int64_t>(k - 1)) *
               fact(i) * bx(n, i);
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace gencomp
