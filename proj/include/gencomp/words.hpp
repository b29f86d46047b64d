#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gencomp/integer.hpp"
#include "gencomp/sequences.hpp"

namespace gencomp {

/// Brute-force counting of restricted words. Nothing here knows about
/// composition triangles; the counts are an independent ground truth.

using Letter = std::uint8_t;

/// A finite word over {0, ..., alphabet-1}.
class Word {
 public:
  Word(std::vector<Letter> letters, unsigned alphabet);

  /// Parses a string of decimal digits, e.g. "0102".
  static Word from_string(std::string_view digits, unsigned alphabet);

  std::span<const Letter> letters() const { return letters_; }
  unsigned alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  unsigned alphabet_;
};

enum class Restriction {
  None,
  IsolatedZeros,      // no factor 00
  NoOddZeroRuns,      // every maximal run of 0s has even length
  Avoid01,            // no factor 01
  IsolatedNonzeros,   // no two adjacent nonzero letters
  ZeroFramedBounded,  // starts and ends with 0, 0-runs <= 2, nonzeros isolated
};

std::string_view restriction_name(Restriction r);

bool check(std::span<const Letter> letters, Restriction r);
bool check(const Word& w, Restriction r);

struct WordModel {
  unsigned alphabet = 2;
  std::size_t length = 0;
  Restriction restriction = Restriction::None;
  std::optional<unsigned> marked_letter;
  std::optional<std::size_t> marked_count;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1}
                                                           << 26;

/// alphabet^length, saturating at UINT64_MAX.
std::uint64_t enumeration_size(unsigned alphabet, std::size_t length);

/// Enumerates every word of the given length and returns, for c = 0..length,
/// how many pass the restriction with exactly c occurrences of marked_letter.
/// Throws EnumerationTooLargeError if alphabet^length exceeds the budget.
std::vector<Count> count_by_marked(unsigned alphabet, std::size_t length,
                                   Restriction restriction,
                                   unsigned marked_letter,
                                   std::uint64_t budget =
                                       kDefaultEnumerationBudget);

/// Number of words of the model passing the restriction and, when a mark is
/// set, containing exactly marked_count copies of marked_letter.
Count count_words(const WordModel& model,
                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Part p becomes 1 followed by p-1 zeros; the leading 1 is dropped.
Word composition_to_word(std::span<const unsigned> parts);
std::vector<unsigned> word_to_composition(const Word& w);

/// The word model whose count is c_m(n,k) for a mapped preset.
/// Throws std::invalid_argument for CUSTOM, m == 0, k outside 1..n, and
/// GE2 with n <= 3.
WordModel oracle_model(Preset preset, unsigned m, std::size_t n,
                       std::size_t k);

Count oracle_c(Preset preset, unsigned m, std::size_t n, std::size_t k,
               std::uint64_t budget = kDefaultEnumerationBudget);

/// oracle_c(preset, m, n, k) for k = 1..n from a single enumeration.
std::vector<Count> oracle_row(Preset preset, unsigned m, std::size_t n,
                              std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace gencomp
