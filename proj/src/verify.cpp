#include "gencomp/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gencomp/bell.hpp"
#include "gencomp/identities.hpp"
#include "gencomp/pascal.hpp"
#include "gencomp/sequences.hpp"
#include "gencomp/triangle.hpp"

namespace gencomp {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

class Tally {
 public:
  explicit Tally(std::string_view name) { result_.name = name; }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.total;
    if (ok) {
      ++result_.passed;
    } else if (result_.failures.size() < kMaxRecordedFailures) {
      result_.failures.push_back(describe());
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string label(Preset p, unsigned m, std::size_t n, std::size_t k = 0) {
  std::ostringstream out;
  out << preset_name(p) << " m=" << m << " n=" << n;
  if (k != 0) out << " k=" << k;
  return out.str();
}

ArithmeticFunction seed(Preset p, std::size_t n) { return make_seed({p, {}}, n); }

void all_compositions(std::size_t n, std::vector<unsigned>& prefix,
                      std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned p = 1; p <= n; ++p) {
    prefix.push_back(p);
    all_compositions(n - p, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Word> all_binary_words(std::size_t length) {
  std::vector<Word> words;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
    std::vector<Letter> letters(length);
    for (std::size_t i = 0; i < length; ++i) {
      letters[i] = static_cast<Letter>((bits >> (length - 1 - i)) & 1U);
    }
    words.emplace_back(std::move(letters), 2);
  }
  return words;
}

SuiteResult suite_binomial(std::size_t bound) {
  Tally t("binomial");
  for (std::size_t n = 1; n <= bound; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      t.expect(check_id(n, k), [&] { return label(Preset::Ones, 0, n, k); });
    }
  }
  return t.take();
}

SuiteResult suite_cp(std::size_t bound) {
  Tally t("cp");
  for (unsigned m = 2; m <= 5; ++m) {
    for (std::size_t n = 1; n <= bound; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        t.expect(check_cp(m, n, k), [&] { return label(Preset::Ones, m, n, k); });
      }
    }
  }
  return t.take();
}

SuiteResult suite_pair_sum(std::string_view name, std::size_t bound,
                           std::uint64_t budget,
                           bool (*checker)(std::size_t, std::size_t,
                                           std::uint64_t)) {
  Tally t(name);
  for (std::size_t n = 1; n < bound; ++n) {
    for (std::size_t k = 1; k <= n && n + k <= bound; ++k) {
      t.expect(checker(n, k, budget), [&] {
        return "n=" + std::to_string(n) + " k=" + std::to_string(k);
      });
    }
  }
  return t.take();
}

SuiteResult suite_bell(std::size_t bound) {
  Tally t("bell");
  for (Preset p : kMappedPresets) {
    const auto f = seed(p, bound);
    t.expect(bell_invert_identity_check(
                 BellArguments({f.values().begin(), f.values().end()}), bound),
             [&] { return std::string(preset_name(p)); });
  }
  std::size_t index = 0;
  for (auto& values : random_small_seeds(20, bound, 20240611)) {
    ++index;
    t.expect(bell_invert_identity_check(BellArguments(std::move(values)), bound),
             [&] { return "random seed #" + std::to_string(index); });
  }
  return t.take();
}

SuiteResult suite_pascal(std::size_t bound) {
  Tally t("pascal");
  const auto lower = pascal_lower(bound);
  for (Preset p : kMappedPresets) {
    const auto f0 = seed(p, bound);
    const auto c1 = triangle_recurrence(f0, 1, bound);
    auto previous = c1;
    for (unsigned m = 2; m <= 4; ++m) {
      const auto direct = triangle_recurrence(f0, m, bound);
      t.expect(to_matrix(direct) == mat_mul(to_matrix(previous), lower),
               [&] { return label(p, m, bound) + " C_m = C_{m-1} L"; });
      t.expect(to_matrix(direct) ==
                   mat_mul(to_matrix(c1), mat_pow(lower, m - 1)),
               [&] { return label(p, m, bound) + " C_m = C_1 L^{m-1}"; });
      t.expect(step_up(previous) == direct,
               [&] { return label(p, m, bound) + " step_up"; });
      previous = direct;
    }
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(bound, 12); ++n) {
    const auto [q, q_inv] = shifted_pascal_inverse(n);
    t.expect(mat_mul(q, q_inv) == LowerTriangularMatrix::identity(n),
             [&] { return "Q Q^-1 != I at n=" + std::to_string(n); });
  }
  for (unsigned m = 1; m <= 6; ++m) {
    const std::size_t n = std::max<std::size_t>(bound, 20);
    const auto power = mat_pow(pascal_lower(n), m);
    bool ok = true;
    for (std::size_t i = 1; i <= n && ok; ++i) {
      for (std::size_t j = 1; j <= i; ++j) {
        const Integer expected =
            ipow(m, i - j) * binomial(static_cast<std::int64_t>(i) - 1,
                                      static_cast<std::int64_t>(j) - 1);
        if (power(i, j) != expected) ok = false;
      }
    }
    t.expect(ok, [&] { return "L^" + std::to_string(m) + " closed form"; });
  }
  return t.take();
}

SuiteResult suite_rowsum(std::size_t bound) {
  Tally t("rowsum");
  for (Preset p : kMappedPresets) {
    const auto f0 = seed(p, bound);
    for (unsigned m = 1; m <= 5; ++m) {
      const auto fm = iterate_invert(f0, m);
      const auto tri = triangle_recurrence(f0, m, bound);
      const auto c1 = triangle_recurrence(f0, 1, bound);
      for (std::size_t n = 1; n <= bound; ++n) {
        t.expect(row_sum(tri, n) == fm(n),
                 [&] { return label(p, m, n) + " row sum"; });
        Count via = 0;
        Integer weight = 1;
        for (std::size_t i = 1; i <= n; ++i) {
          via += weight * c1(n, i);
          weight *= m;
        }
        t.expect(via == fm(n), [&] { return label(p, m, n) + " m-power sum"; });
      }
    }
  }
  return t.take();
}

SuiteResult suite_closed_forms(std::size_t bound) {
  Tally t("closed-forms");
  for (Preset p : kMappedPresets) {
    const auto report = check_closed_forms(p, bound, 4);
    for (const auto& e : report.entries) {
      t.expect(e.pass, [&] { return label(p, e.m, e.n, e.k); });
    }
  }
  return t.take();
}

SuiteResult suite_agreement(std::size_t bound) {
  Tally t("agreement");
  for (Preset p : kMappedPresets) {
    const auto f0 = seed(p, bound);
    for (unsigned m = 1; m <= 4; ++m) {
      const auto reference = triangle_recurrence(f0, m, bound);
      for (Algorithm algo : kAllAlgorithms) {
        if (algo == Algorithm::Recurrence) continue;
        t.expect(build_triangle(algo, f0, m, bound) == reference, [&] {
          return label(p, m, bound) + " " + std::string(algorithm_name(algo));
        });
      }
    }
  }
  return t.take();
}

SuiteResult suite_bijection(std::size_t bound) {
  Tally t("bijection");
  for (std::size_t n = 1; n <= bound; ++n) {
    std::vector<std::vector<unsigned>> comps;
    std::vector<unsigned> prefix;
    all_compositions(n, prefix, comps);
    std::set<std::string> fib_image;
    std::set<std::string> ge2_image;
    std::set<std::string> two_three_image;
    for (const auto& c : comps) {
      const Word w = composition_to_word(c);
      t.expect(w.size() == n - 1 && word_to_composition(w) == c,
               [&] { return "round trip n=" + std::to_string(n); });
      auto all_in = [&c](unsigned lo, unsigned hi) {
        return std::all_of(c.begin(), c.end(),
                           [=](unsigned p) { return p >= lo && p <= hi; });
      };
      if (all_in(1, 2)) fib_image.insert(w.to_string());
      if (all_in(2, n) && n >= 4) {
        // Strip the forced leading and trailing 0.
        ge2_image.insert(w.to_string().substr(1, n - 3));
      }
      if (all_in(2, 3)) two_three_image.insert(w.to_string());
    }
    std::set<std::string> fib_words;
    std::set<std::string> two_three_words;
    for (const auto& w : all_binary_words(n - 1)) {
      if (check(w, Restriction::IsolatedZeros)) fib_words.insert(w.to_string());
      if (check(w, Restriction::ZeroFramedBounded)) {
        two_three_words.insert(w.to_string());
      }
    }
    t.expect(fib_image == fib_words,
             [&] { return "FIB family n=" + std::to_string(n); });
    t.expect(two_three_image == two_three_words,
             [&] { return "TWO_THREE family n=" + std::to_string(n); });
    if (n >= 4) {
      std::set<std::string> ge2_words;
      for (const auto& w : all_binary_words(n - 3)) {
        if (check(w, Restriction::IsolatedNonzeros)) {
          ge2_words.insert(w.to_string());
        }
      }
      t.expect(ge2_image == ge2_words,
               [&] { return "GE2 family n=" + std::to_string(n); });
    }
  }
  return t.take();
}

SuiteResult suite_oracle(std::size_t bound, std::uint64_t budget) {
  Tally t("oracle");
  for (Preset p : kMappedPresets) {
    const auto f0 = seed(p, bound);
    for (unsigned m = 1; m <= 3; ++m) {
      const auto tri = triangle_recurrence(f0, m, bound);
      for (std::size_t n = (p == Preset::Ge2 ? 4 : 1); n <= bound; ++n) {
        const auto row = oracle_row(p, m, n, budget);
        for (std::size_t k = 1; k <= n; ++k) {
          t.expect(row[k - 1] == tri(n, k), [&] { return label(p, m, n, k); });
        }
      }
    }
  }
  return t.take();
}

std::size_t default_bound(std::string_view name) {
  if (name == "binomial") return 20;
  if (name == "cp") return 18;
  if (name == "euler") return 14;
  if (name == "chebyshev") return 16;
  if (name == "bell") return 10;
  if (name == "pascal") return 16;
  if (name == "rowsum") return 30;
  if (name == "closed-forms") return 20;
  if (name == "agreement") return 24;
  if (name == "bijection") return 12;
  if (name == "oracle") return 9;
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "binomial", "cp",        "euler",     "chebyshev", "bell",  "pascal",
      "rowsum",   "closed-forms", "agreement", "bijection", "oracle"};
  return names;
}

SuiteResult run_suite(std::string_view name, std::optional<std::size_t> bound,
                      std::uint64_t budget) {
  const std::size_t b = bound.value_or(default_bound(name));
  if (b == 0) throw std::invalid_argument("suite bound must be >= 1");
  if (name == "binomial") return suite_binomial(b);
  if (name == "cp") return suite_cp(b);
  if (name == "euler") return suite_pair_sum(name, b, budget, check_euler_type);
  if (name == "chebyshev") {
    return suite_pair_sum(name, b, budget, check_chebyshev);
  }
  if (name == "bell") return suite_bell(b);
  if (name == "pascal") return suite_pascal(b);
  if (name == "rowsum") return suite_rowsum(b);
  if (name == "closed-forms") return suite_closed_forms(b);
  if (name == "agreement") return suite_agreement(b);
  if (name == "bijection") return suite_bijection(b);
  if (name == "oracle") return suite_oracle(b, budget);
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::vector<std::vector<Integer>> random_small_seeds(std::size_t count,
                                                     std::size_t length,
                                                     std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> dist(0, 3);
  std::vector<std::vector<Integer>> seeds(count);
  for (auto& s : seeds) {
    s.reserve(length);
    for (std::size_t i = 0; i < length; ++i) s.emplace_back(dist(rng));
  }
  return seeds;
}

}  // namespace gencomp
