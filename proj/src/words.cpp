#include "gencomp/words.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "gencomp/errors.hpp"

namespace gencomp {

namespace {

bool has_factor(std::span<const Letter> w, auto&& pair_matches) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (pair_matches(w[i - 1], w[i])) return true;
  }
  return false;
}

bool zero_runs_even(std::span<const Letter> w) {
  std::size_t run = 0;
  for (Letter c : w) {
    if (c == 0) {
      ++run;
    } else {
      if (run % 2 == 1) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

bool zero_framed_bounded(std::span<const Letter> w) {
  if (w.empty() || w.front() != 0 || w.back() != 0) return false;
  std::size_t run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) {
      if (++run > 2) return false;
    } else {
      run = 0;
      if (i > 0 && w[i - 1] != 0) return false;
    }
  }
  return true;
}

}  // namespace

Word::Word(std::vector<Letter> letters, unsigned alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  if (alphabet == 0 || alphabet > std::numeric_limits<Letter>::max()) {
    throw std::invalid_argument("alphabet size out of range");
  }
  for (Letter c : letters_) {
    if (c >= alphabet) throw std::invalid_argument("letter outside alphabet");
  }
}

Word Word::from_string(std::string_view digits, unsigned alphabet) {
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("non-digit letter");
    letters.push_back(static_cast<Letter>(ch - '0'));
  }
  return {std::move(letters), alphabet};
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter c : letters_) {
    if (c < 10) {
      out.push_back(static_cast<char>('0' + c));
    } else {
      out += "[" + std::to_string(c) + "]";
    }
  }
  return out;
}

std::string_view restriction_name(Restriction r) {
  switch (r) {
    case Restriction::None:
      return "none";
    case Restriction::IsolatedZeros:
      return "isolated_zeros";
    case Restriction::NoOddZeroRuns:
      return "no_odd_zero_runs";
    case Restriction::Avoid01:
      return "avoid_01";
    case Restriction::IsolatedNonzeros:
      return "isolated_nonzeros";
    case Restriction::ZeroFramedBounded:
      return "zero_framed_bounded";
  }
  return "unknown";
}

bool check(std::span<const Letter> w, Restriction r) {
  switch (r) {
    case Restriction::None:
      return true;
    case Restriction::IsolatedZeros:
      return !has_factor(w, [](Letter a, Letter b) { return a == 0 && b == 0; });
    case Restriction::NoOddZeroRuns:
      return zero_runs_even(w);
    case Restriction::Avoid01:
      return !has_factor(w, [](Letter a, Letter b) { return a == 0 && b == 1; });
    case Restriction::IsolatedNonzeros:
      return !has_factor(w, [](Letter a, Letter b) { return a != 0 && b != 0; });
    case Restriction::ZeroFramedBounded:
      return zero_framed_bounded(w);
  }
  return false;
}

bool check(const Word& w, Restriction r) { return check(w.letters(), r); }

std::uint64_t enumeration_size(unsigned alphabet, std::size_t length) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (alphabet != 0 && total > kMax / alphabet) return kMax;
    total *= alphabet;
  }
  return total;
}

std::vector<Count> count_by_marked(unsigned alphabet, std::size_t length,
                                   Restriction restriction,
                                   unsigned marked_letter,
                                   std::uint64_t budget) {
  if (alphabet == 0 || alphabet > std::numeric_limits<Letter>::max()) {
    throw std::invalid_argument("alphabet size out of range");
  }
  const std::uint64_t size = enumeration_size(alphabet, length);
  if (size > budget) {
    throw EnumerationTooLargeError(
        "enumerating " + std::to_string(alphabet) + "^" +
        std::to_string(length) + " words exceeds the budget of " +
        std::to_string(budget));
  }

  std::vector<std::uint64_t> histogram(length + 1, 0);
  std::vector<Letter> word(length, 0);
  const auto mark = static_cast<Letter>(marked_letter);
  const auto top = static_cast<Letter>(alphabet - 1);
  // Odometer over all words; `marks` tracks occurrences of the marked letter.
  std::size_t marks = (marked_letter == 0) ? length : 0;
  while (true) {
    if (check(word, restriction)) ++histogram[marks];
    std::size_t pos = length;
    while (pos > 0 && word[pos - 1] == top) {
      if (word[pos - 1] == mark) --marks;
      word[pos - 1] = 0;
      if (mark == 0) ++marks;
      --pos;
    }
    if (pos == 0) break;
    if (word[pos - 1] == mark) --marks;
    ++word[pos - 1];
    if (word[pos - 1] == mark) ++marks;
  }

  std::vector<Count> counts;
  counts.reserve(histogram.size());
  for (auto h : histogram) counts.emplace_back(h);
  return counts;
}

Count count_words(const WordModel& model, std::uint64_t budget) {
  if (model.marked_letter && *model.marked_letter >= model.alphabet) {
    throw std::invalid_argument("marked letter outside alphabet");
  }
  const unsigned mark = model.marked_letter.value_or(0);
  const auto histogram = count_by_marked(model.alphabet, model.length,
                                         model.restriction, mark, budget);
  if (!model.marked_letter || !model.marked_count) {
    Count total = 0;
    for (const auto& h : histogram) total += h;
    return total;
  }
  const std::size_t wanted = *model.marked_count;
  return wanted < histogram.size() ? histogram[wanted] : Count(0);
}

Word composition_to_word(std::span<const unsigned> parts) {
  if (parts.empty()) throw std::invalid_argument("composition is empty");
  std::vector<Letter> letters;
  for (unsigned p : parts) {
    if (p == 0) throw std::invalid_argument("composition parts must be >= 1");
    letters.push_back(1);
    letters.insert(letters.end(), p - 1, 0);
  }
  letters.erase(letters.begin());
  return {std::move(letters), 2};
}

std::vector<unsigned> word_to_composition(const Word& w) {
  if (w.alphabet() > 2) {
    for (Letter c : w.letters()) {
      if (c > 1) throw std::invalid_argument("composition word must be binary");
    }
  }
  std::vector<unsigned> parts{1};
  for (Letter c : w.letters()) {
    if (c == 1) {
      parts.push_back(1);
    } else {
      ++parts.back();
    }
  }
  return parts;
}

WordModel oracle_model(Preset preset, unsigned m, std::size_t n,
                       std::size_t k) {
  if (m == 0) throw std::invalid_argument("oracle needs m >= 1");
  if (k == 0 || k > n) throw std::invalid_argument("oracle needs 1 <= k <= n");
  WordModel model;
  model.alphabet = m + 1;
  model.length = n - 1;
  model.marked_letter = m;
  model.marked_count = k - 1;
  switch (preset) {
    case Preset::Ones:
      model.restriction = Restriction::None;
      break;
    case Preset::Fib:
      model.restriction = Restriction::IsolatedZeros;
      break;
    case Preset::Odd:
      model.restriction = Restriction::NoOddZeroRuns;
      break;
    case Preset::Natural:
      model.alphabet = m + 2;
      model.restriction = Restriction::Avoid01;
      model.marked_letter = m + 1;
      break;
    case Preset::Ge2:
      if (n <= 3) throw std::invalid_argument("GE2 oracle needs n > 3");
      model.length = n - 3;
      model.restriction = Restriction::IsolatedNonzeros;
      model.marked_letter = 1;
      break;
    case Preset::TwoThree:
      model.restriction = Restriction::ZeroFramedBounded;
      model.marked_letter = 1;
      break;
    case Preset::Custom:
      throw std::invalid_argument("custom seeds have no word model");
  }
  return model;
}

Count oracle_c(Preset preset, unsigned m, std::size_t n, std::size_t k,
               std::uint64_t budget) {
  return count_words(oracle_model(preset, m, n, k), budget);
}

std::vector<Count> oracle_row(Preset preset, unsigned m, std::size_t n,
                              std::uint64_t budget) {
  const WordModel model = oracle_model(preset, m, n, 1);
  const auto histogram =
      count_by_marked(model.alphabet, model.length, model.restriction,
                      *model.marked_letter, budget);
  std::vector<Count> row(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k - 1 < histogram.size()) row[k - 1] = histogram[k - 1];
  }
  return row;
}

}  // namespace gencomp
