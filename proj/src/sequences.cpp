#include "gencomp/sequences.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "gencomp/errors.hpp"
#include "gencomp/triangle.hpp"

namespace gencomp {

namespace {

constexpr std::array<std::pair<Preset, std::string_view>, 7> kPresetNames{{
    {Preset::Ones, "ones"},
    {Preset::Fib, "fib"},
    {Preset::Odd, "odd"},
    {Preset::Natural, "natural"},
    {Preset::Ge2, "ge2"},
    {Preset::TwoThree, "two_three"},
    {Preset::Custom, "custom"},
}};

Integer preset_value(Preset preset, std::size_t i) {
  switch (preset) {
    case Preset::Ones:
      return 1;
    case Preset::Fib:
      return i <= 2 ? 1 : 0;
    case Preset::Odd:
      return i % 2 == 1 ? 1 : 0;
    case Preset::Natural:
      return Integer(i);
    case Preset::Ge2:
      return i == 1 ? 0 : 1;
    case Preset::TwoThree:
      return (i == 2 || i == 3) ? 1 : 0;
    case Preset::Custom:
      break;
  }
  throw std::logic_error("preset_value called for CUSTOM");
}

}  // namespace

ArithmeticFunction::ArithmeticFunction(std::vector<Integer> values,
                                       std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) {
    throw std::invalid_argument("arithmetic function needs N >= 1 values");
  }
}

const Integer& ArithmeticFunction::operator()(std::size_t n) const {
  if (n == 0 || n > values_.size()) {
    throw std::out_of_range("arithmetic function index " + std::to_string(n) +
                            " outside 1.." + std::to_string(values_.size()));
  }
  return values_[n - 1];
}

ArithmeticFunction ArithmeticFunction::prefix(std::size_t n) const {
  if (n == 0 || n > values_.size()) {
    throw InsufficientSeedError("prefix of length " + std::to_string(n) +
                                " requested from a function of length " +
                                std::to_string(values_.size()));
  }
  return {std::vector<Integer>(values_.begin(), values_.begin() + n), label_};
}

std::string_view preset_name(Preset preset) {
  for (const auto& [tag, name] : kPresetNames) {
    if (tag == preset) return name;
  }
  return "unknown";
}

std::optional<Preset> parse_preset(std::string_view name) {
  for (const auto& [tag, known] : kPresetNames) {
    if (known == name) return tag;
  }
  return std::nullopt;
}

ArithmeticFunction make_seed(const SeedPreset& preset, std::size_t n) {
  if (n == 0) throw std::invalid_argument("seed length must be >= 1");
  if (preset.tag == Preset::Custom) {
    const auto& custom = preset.custom_values;
    if (custom.empty()) throw InvalidSeedError("custom seed has no values");
    for (const auto& v : custom) {
      if (v < 0) throw InvalidSeedError("custom seed values must be >= 0");
    }
    if (custom.size() < n) {
      throw InsufficientSeedError(
          "custom seed has " + std::to_string(custom.size()) +
          " values but N = " + std::to_string(n));
    }
    return {std::vector<Integer>(custom.begin(), custom.begin() + n),
            "custom"};
  }
  std::vector<Integer> values;
  values.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    values.push_back(preset_value(preset.tag, i));
  }
  return {std::move(values), std::string(preset_name(preset.tag))};
}

ArithmeticFunction invert_transform(const ArithmeticFunction& f) {
  const std::size_t size = f.size();
  std::vector<Integer> g(size);
  for (std::size_t n = 1; n <= size; ++n) {
    Integer acc = f(n);
    for (std::size_t i = 1; i < n; ++i) acc += f(i) * g[n - i - 1];
    g[n - 1] = std::move(acc);
  }
  return {std::move(g), f.label()};
}

ArithmeticFunction iterate_invert(const ArithmeticFunction& f0, unsigned m) {
  ArithmeticFunction f = f0;
  for (unsigned step = 0; step < m; ++step) f = invert_transform(f);
  return f;
}

Count f_via_triangle(const ArithmeticFunction& f0, unsigned m,
                     std::size_t n) {
  if (m == 0) throw std::invalid_argument("f_via_triangle needs m >= 1");
  const CompositionTriangle c1 = triangle_recurrence(f0, 1, n);
  Count total = 0;
  Integer weight = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    total += weight * c1(n, i);
    weight *= m;
  }
  return total;
}

}  // namespace gencomp
