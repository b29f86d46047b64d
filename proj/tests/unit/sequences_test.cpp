#include "gencomp/sequences.hpp"

#include <random>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "gencomp/errors.hpp"

namespace gencomp {
namespace {

using testing::count_if_words;

std::vector<Integer> ints(std::initializer_list<int> v) {
  return {v.begin(), v.end()};
}

std::vector<Integer> values(const ArithmeticFunction& f) {
  return {f.values().begin(), f.values().end()};
}

ArithmeticFunction seed(Preset p, std::size_t n) { return make_seed({p, {}}, n); }

TEST(MakeSeed, PresetCatalog) {
  EXPECT_EQ(values(seed(Preset::Ones, 4)), ints({1, 1, 1, 1}));
  EXPECT_EQ(values(seed(Preset::Fib, 5)), ints({1, 1, 0, 0, 0}));
  EXPECT_EQ(values(seed(Preset::TwoThree, 4)), ints({0, 1, 1, 0}));
  EXPECT_EQ(values(seed(Preset::Odd, 5)), ints({1, 0, 1, 0, 1}));
  EXPECT_EQ(values(seed(Preset::Natural, 4)), ints({1, 2, 3, 4}));
  EXPECT_EQ(values(seed(Preset::Ge2, 4)), ints({0, 1, 1, 1}));
}

TEST(MakeSeed, CustomSeeds) {
  const auto f = make_seed({Preset::Custom, ints({3, 0, 2})}, 2);
  EXPECT_EQ(values(f), ints({3, 0}));
  EXPECT_THROW(make_seed({Preset::Custom, {}}, 1), InvalidSeedError);
  EXPECT_THROW(make_seed({Preset::Custom, ints({1, -1})}, 2), InvalidSeedError);
  EXPECT_THROW(make_seed({Preset::Custom, ints({1, 1})}, 3),
               InsufficientSeedError);
  EXPECT_THROW(make_seed({Preset::Ones, {}}, 0), std::invalid_argument);
}

TEST(ArithmeticFunction, OneBasedIndexing) {
  const auto f = seed(Preset::Natural, 3);
  EXPECT_EQ(f(1), 1);
  EXPECT_EQ(f(3), 3);
  EXPECT_THROW(f(0), std::out_of_range);
  EXPECT_THROW(f(4), std::out_of_range);
}

TEST(InvertTransform, ZeroStaysZero) {
  const ArithmeticFunction zero(ints({0, 0, 0, 0, 0}), "zero");
  EXPECT_EQ(invert_transform(zero), zero);
}

TEST(InvertTransform, FibSeedCountsWordsWithIsolatedZeros) {
  const auto g = invert_transform(seed(Preset::Fib, 5));
  EXPECT_EQ(values(g), ints({1, 2, 3, 5, 8}));
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto brute = count_if_words(2, n - 1, [](const std::string& w) {
      return w.find("00") == std::string::npos;
    });
    EXPECT_EQ(g(n), brute) << "n=" << n;
  }
}

TEST(InvertTransform, OnesGivesPowersOfTwo) {
  EXPECT_EQ(values(invert_transform(seed(Preset::Ones, 5))),
            ints({1, 2, 4, 8, 16}));
}

TEST(IterateInvert, ZeroIterationsIsIdentity) {
  const ArithmeticFunction f(ints({4, 0, 7}), "x");
  EXPECT_EQ(iterate_invert(f, 0), f);
}

TEST(IterateInvert, OnesGivesPowersOfMPlusOne) {
  const auto f0 = seed(Preset::Ones, 12);
  for (unsigned m = 1; m <= 5; ++m) {
    const auto fm = iterate_invert(f0, m);
    for (std::size_t n = 1; n <= 12; ++n) {
      EXPECT_EQ(fm(n), ipow(m + 1, n - 1)) << "m=" << m << " n=" << n;
    }
  }
}

TEST(IterateInvert, FibTwiceCountsTernaryWordsWithIsolatedZeros) {
  const auto f2 = iterate_invert(seed(Preset::Fib, 6), 2);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto brute = count_if_words(3, n - 1, [](const std::string& w) {
      return w.find("00") == std::string::npos;
    });
    EXPECT_EQ(f2(n), brute) << "n=" << n;
  }
  EXPECT_EQ(f2(4), 22);
}

TEST(FViaTriangle, Examples) {
  EXPECT_EQ(f_via_triangle(seed(Preset::Ones, 4), 2, 4), 27);
  EXPECT_EQ(f_via_triangle(seed(Preset::Fib, 5), 1, 5), 8);
}

TEST(Properties, TriangleRouteMatchesIteratedTransform) {
  for (Preset p : kMappedPresets) {
    const auto f0 = seed(p, 20);
    for (unsigned m = 1; m <= 5; ++m) {
      const auto fm = iterate_invert(f0, m);
      for (std::size_t n = 1; n <= 20; ++n) {
        ASSERT_EQ(f_via_triangle(f0, m, n), fm(n))
            << preset_name(p) << " m=" << m << " n=" << n;
      }
    }
  }
}

TEST(Properties, FirstValueIsFixed) {
  for (Preset p : kMappedPresets) {
    const auto f0 = seed(p, 6);
    for (unsigned m = 0; m <= 5; ++m) {
      EXPECT_EQ(iterate_invert(f0, m)(1), f0(1));
    }
  }
}

TEST(Properties, MonotoneAndComposes) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Integer> v(10);
    for (auto& x : v) x = dist(rng);
    const ArithmeticFunction f(v, "random");
    const auto g = invert_transform(f);
    for (std::size_t n = 1; n <= f.size(); ++n) EXPECT_GE(g(n), f(n));
    EXPECT_EQ(iterate_invert(g, 1), iterate_invert(f, 2));
  }
}

TEST(Presets, NamesRoundTrip) {
  for (Preset p : kMappedPresets) EXPECT_EQ(parse_preset(preset_name(p)), p);
  EXPECT_EQ(parse_preset("custom"), Preset::Custom);
  EXPECT_FALSE(parse_preset("bogus"));
}

}  // namespace
}  // namespace gencomp
