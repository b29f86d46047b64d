#include "gencomp/words.hpp"

#include <regex>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "gencomp/errors.hpp"

namespace gencomp {
namespace {

using testing::all_words;
using testing::choose;

constexpr Restriction kAllRestrictions[] = {
    Restriction::None,          Restriction::IsolatedZeros,
    Restriction::NoOddZeroRuns, Restriction::Avoid01,
    Restriction::IsolatedNonzeros, Restriction::ZeroFramedBounded};

// Each restriction restated as a regular expression over the digit string.
bool regex_oracle(const std::string& w, Restriction r) {
  switch (r) {
    case Restriction::None:
      return true;
    case Restriction::IsolatedZeros:
      return !std::regex_search(w, std::regex("00"));
    case Restriction::NoOddZeroRuns:
      return std::regex_match(w, std::regex("(00|[1-9])*"));
    case Restriction::Avoid01:
      return !std::regex_search(w, std::regex("01"));
    case Restriction::IsolatedNonzeros:
      return !std::regex_search(w, std::regex("[1-9][1-9]"));
    case Restriction::ZeroFramedBounded:
      return std::regex_match(w, std::regex("0{1,2}([1-9]0{1,2})*"));
  }
  return false;
}

TEST(Check, Examples) {
  const Word empty({}, 2);
  for (Restriction r : kAllRestrictions) {
    EXPECT_EQ(check(empty, r), r != Restriction::ZeroFramedBounded)
        << restriction_name(r);
  }
  EXPECT_FALSE(check(Word::from_string("00", 2), Restriction::IsolatedZeros));
  EXPECT_TRUE(check(Word::from_string("010", 2), Restriction::ZeroFramedBounded));
  EXPECT_FALSE(check(Word::from_string("0110", 2), Restriction::ZeroFramedBounded));
  EXPECT_FALSE(check(Word::from_string("0001", 2), Restriction::ZeroFramedBounded));
}

TEST(Check, MatchesRegexOracleOnAllSmallWords) {
  for (unsigned a = 1; a <= 4; ++a) {
    for (std::size_t len = 0; len <= 6; ++len) {
      for (const auto& s : all_words(a, len)) {
        const Word w = Word::from_string(s, a);
        for (Restriction r : kAllRestrictions) {
          ASSERT_EQ(check(w, r), regex_oracle(s, r))
              << "'" << s << "' " << restriction_name(r);
        }
      }
    }
  }
}

TEST(Word, Validation) {
  EXPECT_THROW(Word({0, 2}, 2), std::invalid_argument);
  EXPECT_THROW(Word({}, 0), std::invalid_argument);
  EXPECT_EQ(Word::from_string("0120", 3).to_string(), "0120");
}

TEST(CountWords, Examples) {
  EXPECT_EQ(count_words({2, 2, Restriction::IsolatedZeros, {}, {}}), 3);
  EXPECT_EQ(count_words({3, 2, Restriction::None, 2, 1}), 4);
  EXPECT_EQ(count_words({3, 2, Restriction::Avoid01, 2, 1}), 4);
}

TEST(CountWords, UnrestrictedIsFullPower) {
  for (unsigned a = 1; a <= 5; ++a) {
    for (std::size_t len = 0; len <= 6; ++len) {
      EXPECT_EQ(count_words({a, len, Restriction::None, {}, {}}), ipow(a, len));
    }
  }
}

TEST(CountWords, MarkedCountsSumToTotal) {
  for (Restriction r : kAllRestrictions) {
    for (unsigned mark = 0; mark < 3; ++mark) {
      const auto total = count_words({3, 7, r, {}, {}});
      Count sum = 0;
      for (std::size_t c = 0; c <= 8; ++c) sum += count_words({3, 7, r, mark, c});
      EXPECT_EQ(sum, total) << restriction_name(r) << " mark " << mark;
    }
  }
}

TEST(CountWords, MatchesRegexEnumeration) {
  for (Restriction r : kAllRestrictions) {
    for (std::size_t c = 0; c <= 5; ++c) {
      std::uint64_t brute = 0;
      for (const auto& s : all_words(4, 5)) {
        if (regex_oracle(s, r) && testing::occurrences(s, '3') == c) ++brute;
      }
      EXPECT_EQ(count_words({4, 5, r, 3, c}), brute);
    }
  }
}

TEST(CountWords, BudgetIsAHardCap) {
  EXPECT_THROW(count_words({2, 11, Restriction::None, {}, {}}, 1024),
               EnumerationTooLargeError);
  EXPECT_EQ(count_words({2, 10, Restriction::None, {}, {}}, 1024), 1024);
  EXPECT_THROW(count_words({5, 12, Restriction::None, {}, {}}),
               EnumerationTooLargeError);
  EXPECT_THROW(count_words({3, 2, Restriction::None, 3, 1}),
               std::invalid_argument);
}

TEST(Bijection, Examples) {
  EXPECT_EQ(composition_to_word(std::vector<unsigned>{2, 3}).to_string(), "0100");
  EXPECT_EQ(composition_to_word(std::vector<unsigned>{1, 1, 1}).to_string(), "11");
  EXPECT_EQ(composition_to_word(std::vector<unsigned>{1}).to_string(), "");
  EXPECT_EQ(word_to_composition(Word({}, 2)), std::vector<unsigned>{1});
  EXPECT_THROW(composition_to_word(std::vector<unsigned>{}), std::invalid_argument);
  EXPECT_THROW(composition_to_word(std::vector<unsigned>{2, 0}),
               std::invalid_argument);
  EXPECT_THROW(word_to_composition(Word({0, 2}, 3)), std::invalid_argument);
}

TEST(Bijection, EveryBinaryWordDecodesAndRoundTrips) {
  for (std::size_t n = 1; n <= 10; ++n) {
    std::size_t seen = 0;
    for (const auto& s : all_words(2, n - 1)) {
      const Word w = Word::from_string(s, 2);
      const auto parts = word_to_composition(w);
      unsigned sum = 0;
      for (auto p : parts) sum += p;
      EXPECT_EQ(sum, n);
      EXPECT_EQ(parts.size(), 1 + testing::occurrences(s, '1'));
      EXPECT_EQ(composition_to_word(parts), w);
      ++seen;
    }
    EXPECT_EQ(seen, std::size_t{1} << (n - 1));
  }
}

TEST(OracleModel, Mapping) {
  const auto natural = oracle_model(Preset::Natural, 2, 6, 3);
  EXPECT_EQ(natural.alphabet, 4u);
  EXPECT_EQ(natural.length, 5u);
  EXPECT_EQ(natural.restriction, Restriction::Avoid01);
  EXPECT_EQ(natural.marked_letter, 3u);
  EXPECT_EQ(natural.marked_count, 2u);
  const auto ge2 = oracle_model(Preset::Ge2, 3, 7, 2);
  EXPECT_EQ(ge2.alphabet, 4u);
  EXPECT_EQ(ge2.length, 4u);
  EXPECT_EQ(ge2.marked_letter, 1u);
  const auto tt = oracle_model(Preset::TwoThree, 2, 7, 2);
  EXPECT_EQ(tt.restriction, Restriction::ZeroFramedBounded);
  EXPECT_EQ(tt.marked_letter, 1u);
}

TEST(OracleC, Examples) {
  for (unsigned m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 7; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        EXPECT_EQ(oracle_c(Preset::Ones, m, n, k),
                  ipow(m, n - k) * choose(n - 1, k - 1));
      }
    }
  }
  EXPECT_EQ(oracle_c(Preset::Fib, 2, 4, 2), 10);
  EXPECT_EQ(oracle_c(Preset::Ge2, 1, 5, 2), 2);
}

TEST(OracleC, Errors) {
  EXPECT_THROW(oracle_c(Preset::Custom, 1, 3, 1), std::invalid_argument);
  EXPECT_THROW(oracle_c(Preset::Ge2, 1, 3, 1), std::invalid_argument);
  EXPECT_THROW(oracle_c(Preset::Fib, 0, 3, 1), std::invalid_argument);
  EXPECT_THROW(oracle_c(Preset::Fib, 1, 3, 4), std::invalid_argument);
  EXPECT_THROW(oracle_c(Preset::Natural, 3, 13, 3), EnumerationTooLargeError);
}

TEST(OracleRow, AgreesWithSingleQueries) {
  for (Preset p : kMappedPresets) {
    for (unsigned m = 1; m <= 2; ++m) {
      const std::size_t n = 7;
      const auto row = oracle_row(p, m, n);
      for (std::size_t k = 1; k <= n; ++k) {
        EXPECT_EQ(row[k - 1], oracle_c(p, m, n, k)) << preset_name(p);
      }
    }
  }
}

}  // namespace
}  // namespace gencomp
