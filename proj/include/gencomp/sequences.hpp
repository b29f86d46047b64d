#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gencomp/integer.hpp"

namespace gencomp {

/// Finite prefix f(1..N) of an integer-valued arithmetic function.
///
/// Every interface speaks in 1-based indices; f(0) is never addressed.
class ArithmeticFunction {
 public:
  ArithmeticFunction(std::vector<Integer> values, std::string label);

  /// f(n) for 1 <= n <= size(). Throws std::out_of_range otherwise.
  const Integer& operator()(std::size_t n) const;

  std::size_t size() const { return values_.size(); }
  std::span<const Integer> values() const { return values_; }
  const std::string& label() const { return label_; }

  /// The first n values as a new function.
  ArithmeticFunction prefix(std::size_t n) const;

  friend bool operator==(const ArithmeticFunction& a,
                         const ArithmeticFunction& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Integer> values_;
  std::string label_;
};

enum class Preset { Ones, Fib, Odd, Natural, Ge2, TwoThree, Custom };

inline constexpr Preset kMappedPresets[] = {Preset::Ones,    Preset::Fib,
                                            Preset::Odd,     Preset::Natural,
                                            Preset::Ge2,     Preset::TwoThree};

std::string_view preset_name(Preset preset);
std::optional<Preset> parse_preset(std::string_view name);

struct SeedPreset {
  Preset tag = Preset::Ones;
  std::vector<Integer> custom_values;
};

/// The seed f_0 truncated to length n.
///
/// ONES f(i)=1; FIB f(1)=f(2)=1; ODD f(i)=1 for odd i; NATURAL f(i)=i;
/// GE2 f(1)=0 else 1; TWO_THREE f(2)=f(3)=1; CUSTOM from the explicit list,
/// which must be nonempty, nonnegative and at least n long.
ArithmeticFunction make_seed(const SeedPreset& preset, std::size_t n);

/// g(n) = f(n) + sum_{i=1}^{n-1} f(i) g(n-i), same length as f.
ArithmeticFunction invert_transform(const ArithmeticFunction& f);

/// Applies invert_transform m times; m = 0 returns f0.
ArithmeticFunction iterate_invert(const ArithmeticFunction& f0, unsigned m);

/// f_m(n) = sum_{i=1}^{n} m^{i-1} c_1(n,i), evaluated from the m = 1
/// composition triangle of f0.
Count f_via_triangle(const ArithmeticFunction& f0, unsigned m, std::size_t n);

}  // namespace gencomp
