#include "gencomp/pascal.hpp"

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "gencomp/errors.hpp"
#include "gencomp/triangle.hpp"

namespace gencomp {
namespace {

using testing::choose;

TEST(PascalLower, SmallOrders) {
  const auto one = pascal_lower(1);
  EXPECT_EQ(one(1, 1), 1);
  const auto l3 = pascal_lower(3);
  EXPECT_EQ(l3(2, 1), 1);
  EXPECT_EQ(l3(2, 2), 1);
  EXPECT_EQ(l3(3, 1), 1);
  EXPECT_EQ(l3(3, 2), 2);
  EXPECT_EQ(l3(3, 3), 1);
  EXPECT_EQ(l3(1, 3), 0);
  for (std::size_t i = 1; i <= 9; ++i) EXPECT_EQ(pascal_lower(9)(i, i), 1);
}

TEST(MatPow, IdentityAndSquares) {
  const auto l3 = pascal_lower(3);
  EXPECT_EQ(mat_pow(l3, 0), LowerTriangularMatrix::identity(3));
  EXPECT_EQ(mat_mul(l3, l3), mat_pow(l3, 2));
}

TEST(MatPow, PascalPowerClosedForm) {
  for (unsigned m = 1; m <= 6; ++m) {
    const auto p = mat_pow(pascal_lower(12), m);
    for (std::size_t i = 1; i <= 12; ++i) {
      for (std::size_t j = 1; j <= i; ++j) {
        EXPECT_EQ(p(i, j), ipow(m, i - j) * choose(i - 1, j - 1));
      }
    }
  }
}

TEST(MatMul, OrderMismatch) {
  EXPECT_THROW(mat_mul(pascal_lower(2), pascal_lower(3)), DimensionError);
}

TEST(ShiftedPascal, TwoByTwoByHand) {
  const auto [q, q_inv] = shifted_pascal_inverse(2);
  // Q = [[1,0],[2,1]], Q^-1 = [[1,0],[-2,1]].
  EXPECT_EQ(q(1, 1), 1);
  EXPECT_EQ(q(2, 1), 2);
  EXPECT_EQ(q(2, 2), 1);
  EXPECT_EQ(q_inv(2, 1), -2);
  EXPECT_EQ(mat_mul(q, q_inv), LowerTriangularMatrix::identity(2));
}

TEST(ShiftedPascal, InverseUpToTwelve) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto [q, q_inv] = shifted_pascal_inverse(n);
    for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(q_inv(i, i), 1);
    EXPECT_EQ(mat_mul(q, q_inv), LowerTriangularMatrix::identity(n));
    EXPECT_EQ(mat_mul(q_inv, q), LowerTriangularMatrix::identity(n));
  }
}

TEST(LowerTriangularMatrix, StorageRules) {
  LowerTriangularMatrix a(3);
  EXPECT_THROW(a.set(1, 2, 5), std::invalid_argument);
  EXPECT_THROW(a(4, 1), std::out_of_range);
  EXPECT_THROW(LowerTriangularMatrix(0), std::invalid_argument);
}

TEST(TriangleMatrix, ConversionRoundTripsAndStepRelations) {
  for (Preset p : kMappedPresets) {
    const auto f0 = make_seed({p, {}}, 10);
    const auto c1 = triangle_recurrence(f0, 1, 10);
    EXPECT_EQ(to_triangle(to_matrix(c1), 1), c1);
    for (unsigned m = 2; m <= 4; ++m) {
      const auto cm = to_matrix(triangle_recurrence(f0, m, 10));
      const auto prev = to_matrix(triangle_recurrence(f0, m - 1, 10));
      EXPECT_EQ(cm, mat_mul(prev, pascal_lower(10)));
      EXPECT_EQ(cm, mat_mul(to_matrix(c1), mat_pow(pascal_lower(10), m - 1)));
    }
  }
}

}  // namespace
}  // namespace gencomp
