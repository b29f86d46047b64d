#include "gencomp/integer.hpp"

#include <stdexcept>

namespace gencomp {

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  // Each partial product is C(n - k + i, i), so the division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::string to_decimal(const Integer& value) { return value.str(); }

FactorialTable::FactorialTable(std::size_t cap) : table_(cap + 1) {
  table_[0] = 1;
  for (std::size_t i = 1; i <= cap; ++i) table_[i] = table_[i - 1] * i;
}

const Integer& FactorialTable::operator()(std::size_t n) const {
  if (n >= table_.size()) throw std::out_of_range("factorial beyond table cap");
  return table_[n];
}

}  // namespace gencomp
