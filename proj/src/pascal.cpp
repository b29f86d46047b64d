#include "gencomp/pascal.hpp"

#include <stdexcept>
#include <string>

#include "gencomp/errors.hpp"
#include "gencomp/triangle.hpp"

namespace gencomp {

LowerTriangularMatrix::LowerTriangularMatrix(std::size_t order)
    : order_(order), entries_(order * (order + 1) / 2) {
  if (order == 0) throw std::invalid_argument("matrix order must be >= 1");
}

LowerTriangularMatrix LowerTriangularMatrix::identity(std::size_t order) {
  LowerTriangularMatrix result(order);
  for (std::size_t i = 1; i <= order; ++i) result.set(i, i, 1);
  return result;
}

std::size_t LowerTriangularMatrix::index(std::size_t i, std::size_t j) const {
  if (i == 0 || j == 0 || i > order_ || j > order_) {
    throw std::out_of_range("matrix index (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
  }
  return i * (i - 1) / 2 + (j - 1);
}

Integer LowerTriangularMatrix::operator()(std::size_t i, std::size_t j) const {
  if (j > i) {
    index(i, j);  // bounds check only
    return 0;
  }
  return entries_[index(i, j)];
}

void LowerTriangularMatrix::set(std::size_t i, std::size_t j, Integer value) {
  if (j > i) {
    throw std::invalid_argument("cannot set an entry above the diagonal");
  }
  entries_[index(i, j)] = std::move(value);
}

LowerTriangularMatrix pascal_lower(std::size_t n) {
  LowerTriangularMatrix result(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      result.set(i, j, binomial(static_cast<std::int64_t>(i - 1),
                                static_cast<std::int64_t>(j - 1)));
    }
  }
  return result;
}

LowerTriangularMatrix mat_mul(const LowerTriangularMatrix& a,
                              const LowerTriangularMatrix& b) {
  if (a.order() != b.order()) {
    throw DimensionError("order mismatch: " + std::to_string(a.order()) +
                         " vs " + std::to_string(b.order()));
  }
  const std::size_t n = a.order();
  LowerTriangularMatrix result(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      Integer acc = 0;
      for (std::size_t t = j; t <= i; ++t) acc += a(i, t) * b(t, j);
      result.set(i, j, std::move(acc));
    }
  }
  return result;
}

LowerTriangularMatrix mat_pow(const LowerTriangularMatrix& a,
                              std::uint64_t exponent) {
  LowerTriangularMatrix result = LowerTriangularMatrix::identity(a.order());
  LowerTriangularMatrix base = a;
  while (exponent != 0) {
    if (exponent & 1U) result = mat_mul(result, base);
    exponent >>= 1U;
    if (exponent != 0) base = mat_mul(base, base);
  }
  return result;
}

std::pair<LowerTriangularMatrix, LowerTriangularMatrix> shifted_pascal_inverse(
    std::size_t n) {
  LowerTriangularMatrix q(n);
  LowerTriangularMatrix q_inv(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      Integer c = binomial(static_cast<std::int64_t>(i),
                           static_cast<std::int64_t>(j));
      q.set(i, j, c);
      q_inv.set(i, j, (i + j) % 2 == 0 ? c : Integer(-c));
    }
  }
  return {std::move(q), std::move(q_inv)};
}

LowerTriangularMatrix to_matrix(const CompositionTriangle& triangle) {
  LowerTriangularMatrix result(triangle.order());
  for (std::size_t n = 1; n <= triangle.order(); ++n) {
    for (std::size_t k = 1; k <= n; ++k) result.set(n, k, triangle(n, k));
  }
  return result;
}

CompositionTriangle to_triangle(const LowerTriangularMatrix& matrix,
                                unsigned m) {
  std::vector<std::vector<Count>> rows(matrix.order());
  for (std::size_t n = 1; n <= matrix.order(); ++n) {
    rows[n - 1].reserve(n);
    for (std::size_t k = 1; k <= n; ++k) rows[n - 1].push_back(matrix(n, k));
  }
  return {m, std::move(rows)};
}

}  // namespace gencomp
