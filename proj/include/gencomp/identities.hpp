#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gencomp/integer.hpp"
#include "gencomp/sequences.hpp"
#include "gencomp/words.hpp"

namespace gencomp {

/// Dense polynomial with exact integer coefficients, index = degree.
/// Trailing zero coefficients are stripped; the zero polynomial is empty.
class PolynomialZ {
 public:
  PolynomialZ() = default;
  explicit PolynomialZ(std::vector<Integer> coefficients);

  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const {
    return static_cast<std::ptrdiff_t>(coefficients_.size()) - 1;
  }
  /// [x^d]; zero past the degree.
  Integer coefficient(std::size_t d) const;
  const std::vector<Integer>& coefficients() const { return coefficients_; }

  friend bool operator==(const PolynomialZ&, const PolynomialZ&) = default;

 private:
  std::vector<Integer> coefficients_;
};

/// U_0 = 1, U_1 = 2x, U_d = 2x U_{d-1} - U_{d-2}.
PolynomialZ chebyshev_U(std::size_t d);

/// C(n-1,k-1) = sum_{j=1}^{k} (-1)^{j+k} C(k,j) C(n+j-1,n), 1 <= k <= n.
bool check_id(std::size_t n, std::size_t k);

/// m^{n-k} C(n-1,k-1) = sum_{j=0}^{n-k} (m-1)^j C(n-1,k+j-1) C(k+j-1,j),
/// m > 1, 1 <= k <= n.
bool check_cp(unsigned m, std::size_t n, std::size_t k);

/// C(n+k-1, 2k-1) equals the number of ternary words of length n-1 avoiding
/// 01 with k-1 twos (counted by enumeration).
bool check_euler_type(std::size_t n, std::size_t k,
                      std::uint64_t budget = kDefaultEnumerationBudget);

/// |[x^{n-k}] U_{n+k-2}| equals both the number of ternary words of length
/// n-1 with k-1 twos and 2^{n-k} C(n-1,k-1).
bool check_chebyshev(std::size_t n, std::size_t k,
                     std::uint64_t budget = kDefaultEnumerationBudget);

struct ClosedFormEntry {
  unsigned m = 1;
  std::size_t n = 0;
  std::size_t k = 0;
  Count engine;
  Count closed_form;
  bool pass = false;
};

struct ClosedFormReport {
  Preset preset = Preset::Ones;
  std::size_t order = 0;
  std::vector<ClosedFormEntry> entries;  // sorted by (m, n, k)

  bool all_pass() const;
  std::size_t failures() const;
};

/// The known closed form of c_1(n,k) for a mapped preset.
Count closed_form_c1(Preset preset, std::size_t n, std::size_t k);

/// The explicit m-sum for c_m(n,k), m > 1, for presets that have one
/// (all mapped presets except ODD). Returns nullopt otherwise.
std::optional<Count> closed_form_cm(Preset preset, unsigned m, std::size_t n,
                                    std::size_t k);

/// Compares engine triangles with the closed forms for 1 <= k <= n <= order,
/// c_1 for every mapped preset and c_m for 2 <= m <= max_m where an explicit
/// m-sum exists.
ClosedFormReport check_closed_forms(Preset preset, std::size_t order,
                                    unsigned max_m = 1);

}  // namespace gencomp
