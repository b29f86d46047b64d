#include "gencomp/triangle.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "gencomp/bell.hpp"
#include "gencomp/errors.hpp"

namespace gencomp {

namespace {

using Rows = std::vector<std::vector<Count>>;

void check_arguments(const ArithmeticFunction& f0, unsigned m,
                     std::size_t order) {
  if (m == 0) throw std::invalid_argument("triangle needs m >= 1");
  if (order == 0) throw std::invalid_argument("triangle needs N >= 1");
  if (order > f0.size()) {
    throw InsufficientSeedError("triangle of order " + std::to_string(order) +
                                " needs a seed prefix of that length, got " +
                                std::to_string(f0.size()));
  }
}

ArithmeticFunction weights_for(const ArithmeticFunction& f0, unsigned m,
                               std::size_t order) {
  return iterate_invert(f0.prefix(order), m - 1);
}

Rows empty_rows(std::size_t order) {
  Rows rows(order);
  for (std::size_t n = 1; n <= order; ++n) rows[n - 1].resize(n);
  return rows;
}

// Kronecker substitution: a polynomial with nonnegative coefficients below
// 2^bits is packed into the integer sum_i a_i 2^(i*bits).
Integer pack(const std::vector<Integer>& coeffs, unsigned bits) {
  Integer packed = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    packed <<= bits;
    packed += coeffs[i];
  }
  return packed;
}

std::vector<Integer> unpack(Integer packed, unsigned bits, std::size_t count) {
  std::vector<Integer> coeffs(count);
  const Integer mask = (Integer(1) << bits) - 1;
  for (std::size_t i = 0; i < count && packed != 0; ++i) {
    coeffs[i] = packed & mask;
    packed >>= bits;
  }
  return coeffs;
}

unsigned bit_length(const Integer& v) {
  return v == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(v)) + 1;
}

Integer max_coefficient(const std::vector<Integer>& coeffs) {
  Integer best = 0;
  for (const auto& c : coeffs) {
    if (c > best) best = c;
  }
  return best;
}

// Product of a and b truncated to degrees 0..degree.
std::vector<Integer> truncated_product(const std::vector<Integer>& a,
                                       const std::vector<Integer>& b,
                                       std::size_t degree) {
  const unsigned bits = bit_length(max_coefficient(a)) +
                        bit_length(max_coefficient(b)) +
                        bit_length(Integer(degree + 1)) + 1;
  const Integer product = pack(a, bits) * pack(b, bits);
  return unpack(product, bits, degree + 1);
}

}  // namespace

CompositionTriangle::CompositionTriangle(unsigned m,
                                         std::vector<std::vector<Count>> rows)
    : m_(m), order_(rows.size()) {
  if (order_ == 0) throw std::invalid_argument("triangle must have a row");
  entries_.reserve(order_ * (order_ + 1) / 2);
  for (std::size_t n = 1; n <= order_; ++n) {
    auto& row = rows[n - 1];
    if (row.size() != n) {
      throw std::invalid_argument("triangle row " + std::to_string(n) +
                                  " has " + std::to_string(row.size()) +
                                  " entries");
    }
    for (auto& v : row) entries_.push_back(std::move(v));
  }
}

const Count& CompositionTriangle::operator()(std::size_t n,
                                             std::size_t k) const {
  if (k == 0 || k > n || n > order_) {
    throw std::out_of_range("triangle entry (" + std::to_string(n) + "," +
                            std::to_string(k) + ") outside 1<=k<=n<=" +
                            std::to_string(order_));
  }
  return entries_[offset(n) + k - 1];
}

Count CompositionTriangle::value(std::size_t n, std::size_t k) const {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0 || k > n) return 0;
  return (*this)(n, k);
}

std::span<const Count> CompositionTriangle::row(std::size_t n) const {
  if (n == 0 || n > order_) throw std::out_of_range("triangle row");
  return std::span<const Count>(entries_).subspan(offset(n), n);
}

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::Recurrence:
      return "recurrence";
    case Algorithm::Convolution:
      return "conv";
    case Algorithm::Bell:
      return "bell";
    case Algorithm::Pascal:
      return "pascal";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm algo : kAllAlgorithms) {
    if (algorithm_name(algo) == name) return algo;
  }
  return std::nullopt;
}

CompositionTriangle recurrence_from_weights(const ArithmeticFunction& weights,
                                            unsigned m, std::size_t order) {
  check_arguments(weights, m, order);
  Rows rows = empty_rows(order);
  // c(n-i, k-1) including the c(0,0) = 1 convention.
  auto prior = [&rows](std::size_t n, std::size_t k) -> Count {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k == 0 || k > n) return 0;
    return rows[n - 1][k - 1];
  };
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      Count acc = 0;
      for (std::size_t i = 1; i <= n - k + 1; ++i) {
        acc += weights(i) * prior(n - i, k - 1);
      }
      rows[n - 1][k - 1] = std::move(acc);
    }
  }
  return {m, std::move(rows)};
}

CompositionTriangle convolution_from_weights(const ArithmeticFunction& weights,
                                             unsigned m, std::size_t order) {
  check_arguments(weights, m, order);
  std::vector<Integer> base(order + 1);
  for (std::size_t i = 1; i <= order; ++i) {
    if (weights(i) < 0) {
      throw std::invalid_argument("convolution path needs nonnegative weights");
    }
    base[i] = weights(i);
  }
  Rows rows = empty_rows(order);
  std::vector<Integer> power = base;
  for (std::size_t k = 1; k <= order; ++k) {
    if (k > 1) power = truncated_product(power, base, order);
    for (std::size_t n = k; n <= order; ++n) rows[n - 1][k - 1] = power[n];
  }
  return {m, std::move(rows)};
}

CompositionTriangle bell_from_weights(const ArithmeticFunction& weights,
                                      unsigned m, std::size_t order) {
  check_arguments(weights, m, order);
  const FactorialTable fact(order);
  std::vector<Integer> x(order);
  for (std::size_t i = 1; i <= order; ++i) x[i - 1] = fact(i) * weights(i);
  const BellTable bell(BellArguments(std::move(x)), order);

  Rows rows = empty_rows(order);
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      Integer quotient;
      Integer remainder;
      boost::multiprecision::divide_qr(Integer(fact(k) * bell(n, k)), fact(n),
                                       quotient, remainder);
      if (remainder != 0) {
        throw InternalConsistencyError(
            "k!/n! B_{n,k} is not an integer at n=" + std::to_string(n) +
            ", k=" + std::to_string(k));
      }
      rows[n - 1][k - 1] = std::move(quotient);
    }
  }
  return {m, std::move(rows)};
}

CompositionTriangle triangle_recurrence(const ArithmeticFunction& f0,
                                        unsigned m, std::size_t order) {
  check_arguments(f0, m, order);
  return recurrence_from_weights(weights_for(f0, m, order), m, order);
}

CompositionTriangle triangle_convolution(const ArithmeticFunction& f0,
                                         unsigned m, std::size_t order) {
  check_arguments(f0, m, order);
  return convolution_from_weights(weights_for(f0, m, order), m, order);
}

CompositionTriangle triangle_bell(const ArithmeticFunction& f0, unsigned m,
                                  std::size_t order) {
  check_arguments(f0, m, order);
  return bell_from_weights(weights_for(f0, m, order), m, order);
}

CompositionTriangle triangle_pascal(const ArithmeticFunction& f0, unsigned m,
                                    std::size_t order) {
  check_arguments(f0, m, order);
  const CompositionTriangle c1 = recurrence_from_weights(f0, 1, order);
  if (m == 1) return c1;
  Rows rows = empty_rows(order);
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      Count acc = 0;
      Integer weight = 1;  // (m-1)^{i-k}
      for (std::size_t i = k; i <= n; ++i) {
        acc += weight *
               binomial(static_cast<std::int64_t>(i - 1),
                        static_cast<std::int64_t>(k - 1)) *
               c1(n, i);
        weight *= m - 1;
      }
      rows[n - 1][k - 1] = std::move(acc);
    }
  }
  return {m, std::move(rows)};
}

CompositionTriangle build_triangle(Algorithm algo, const ArithmeticFunction& f0,
                                   unsigned m, std::size_t order) {
  switch (algo) {
    case Algorithm::Recurrence:
      return triangle_recurrence(f0, m, order);
    case Algorithm::Convolution:
      return triangle_convolution(f0, m, order);
    case Algorithm::Bell:
      return triangle_bell(f0, m, order);
    case Algorithm::Pascal:
      return triangle_pascal(f0, m, order);
  }
  throw std::invalid_argument("unknown algorithm");
}

CompositionTriangle step_up(const CompositionTriangle& previous) {
  const std::size_t order = previous.order();
  Rows rows = empty_rows(order);
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      Count acc = 0;
      for (std::size_t i = k; i <= n; ++i) {
        acc += binomial(static_cast<std::int64_t>(i - 1),
                        static_cast<std::int64_t>(k - 1)) *
               previous(n, i);
      }
      rows[n - 1][k - 1] = std::move(acc);
    }
  }
  return {previous.m() + 1, std::move(rows)};
}

Count row_sum(const CompositionTriangle& triangle, std::size_t n) {
  Count total = 0;
  for (const auto& v : triangle.row(n)) total += v;
  return total;
}

Count extended_binomial(const ArithmeticFunction& f, std::size_t k,
                        std::size_t n) {
  if (k == 0) throw std::invalid_argument("extended_binomial needs k >= 1");
  const std::size_t order = n + k;
  return recurrence_from_weights(f, 1, order)(order, k);
}

}  // namespace gencomp
