#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gencomp {

/// Exact signed integer. Counts are the nonnegative values of this type.
using Integer = boost::multiprecision::cpp_int;
using Count = Integer;

/// C(n, k) for integer n, k; zero outside 0 <= k <= n.
Integer binomial(std::int64_t n, std::int64_t k);

Integer ipow(const Integer& base, std::uint64_t exponent);

std::string to_decimal(const Integer& value);

/// Factorials 0! .. cap! computed once at construction.
class FactorialTable {
 public:
  explicit FactorialTable(std::size_t cap);

  const Integer& operator()(std::size_t n) const;
  std::size_t cap() const { return table_.size() - 1; }

 private:
  std::vector<Integer> table_;
};

}  // namespace gencomp
