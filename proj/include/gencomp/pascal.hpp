#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "gencomp/integer.hpp"

namespace gencomp {

class CompositionTriangle;

/// Exact lower-triangular matrix, entries a(i,j) for 1 <= j <= i <= order.
/// Entries above the diagonal are zero and not stored.
class LowerTriangularMatrix {
 public:
  explicit LowerTriangularMatrix(std::size_t order);

  static LowerTriangularMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }

  /// a(i,j), 1-based; zero when j > i.
  Integer operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Integer value);

  friend bool operator==(const LowerTriangularMatrix& a,
                         const LowerTriangularMatrix& b) {
    return a.order_ == b.order_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t order_;
  std::vector<Integer> entries_;
};

/// L_n with entry (i,j) = C(i-1, j-1).
LowerTriangularMatrix pascal_lower(std::size_t n);

/// Throws DimensionError on order mismatch.
LowerTriangularMatrix mat_mul(const LowerTriangularMatrix& a,
                              const LowerTriangularMatrix& b);

LowerTriangularMatrix mat_pow(const LowerTriangularMatrix& a,
                              std::uint64_t exponent);

/// Q with entry (i,j) = C(i,j) (L_{n+1} without its first row and column)
/// and the matrix with entry (-1)^{i+j} C(i,j).
std::pair<LowerTriangularMatrix, LowerTriangularMatrix> shifted_pascal_inverse(
    std::size_t n);

/// Places c(n,k) at entry (n,k).
LowerTriangularMatrix to_matrix(const CompositionTriangle& triangle);

CompositionTriangle to_triangle(const LowerTriangularMatrix& matrix,
                                unsigned m);

}  // namespace gencomp
