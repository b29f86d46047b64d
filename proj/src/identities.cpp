#include "gencomp/identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "gencomp/triangle.hpp"

namespace gencomp {

namespace {

using i64 = std::int64_t;

i64 s(std::size_t v) { return static_cast<i64>(v); }

Integer sign(i64 exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

PolynomialZ::PolynomialZ(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

Integer PolynomialZ::coefficient(std::size_t d) const {
  return d < coefficients_.size() ? coefficients_[d] : Integer(0);
}

PolynomialZ chebyshev_U(std::size_t d) {
  std::vector<Integer> previous{1};  // U_0
  if (d == 0) return PolynomialZ(previous);
  std::vector<Integer> current{0, 2};  // U_1
  for (std::size_t step = 2; step <= d; ++step) {
    std::vector<Integer> next(step + 1);
    for (std::size_t i = 0; i < current.size(); ++i) {
      next[i + 1] += 2 * current[i];
    }
    for (std::size_t i = 0; i < previous.size(); ++i) next[i] -= previous[i];
    previous = std::move(current);
    current = std::move(next);
  }
  return PolynomialZ(std::move(current));
}

bool check_id(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw std::invalid_argument("check_id needs 1<=k<=n");
  Integer rhs = 0;
  for (std::size_t j = 1; j <= k; ++j) {
    rhs += sign(s(j + k)) * binomial(s(k), s(j)) * binomial(s(n + j - 1), s(n));
  }
  return binomial(s(n) - 1, s(k) - 1) == rhs;
}

bool check_cp(unsigned m, std::size_t n, std::size_t k) {
  if (m < 2) throw std::invalid_argument("check_cp needs m > 1");
  if (k == 0 || k > n) throw std::invalid_argument("check_cp needs 1<=k<=n");
  const Integer lhs = ipow(m, n - k) * binomial(s(n) - 1, s(k) - 1);
  Integer rhs = 0;
  Integer weight = 1;
  for (std::size_t j = 0; j <= n - k; ++j) {
    rhs += weight * binomial(s(n) - 1, s(k + j) - 1) *
           binomial(s(k + j) - 1, s(j));
    weight *= m - 1;
  }
  return lhs == rhs;
}

bool check_euler_type(std::size_t n, std::size_t k, std::uint64_t budget) {
  if (k == 0 || k > n) {
    throw std::invalid_argument("check_euler_type needs 1<=k<=n");
  }
  const Integer formula = binomial(s(n + k) - 1, 2 * s(k) - 1);
  WordModel model;
  model.alphabet = 3;
  model.length = n - 1;
  model.restriction = Restriction::Avoid01;
  model.marked_letter = 2;
  model.marked_count = k - 1;
  return formula == count_words(model, budget);
}

bool check_chebyshev(std::size_t n, std::size_t k, std::uint64_t budget) {
  if (k == 0 || k > n) {
    throw std::invalid_argument("check_chebyshev needs 1<=k<=n");
  }
  const Integer coefficient = chebyshev_U(n + k - 2).coefficient(n - k);
  const Integer magnitude = abs(coefficient);
  WordModel model;
  model.alphabet = 3;
  model.length = n - 1;
  model.restriction = Restriction::None;
  model.marked_letter = 2;
  model.marked_count = k - 1;
  const Count words = count_words(model, budget);
  const Integer formula = ipow(2, n - k) * binomial(s(n) - 1, s(k) - 1);
  return magnitude == words && magnitude == formula;
}

bool ClosedFormReport::all_pass() const { return failures() == 0; }

std::size_t ClosedFormReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
}

Count closed_form_c1(Preset preset, std::size_t n, std::size_t k) {
  const i64 N = s(n);
  const i64 K = s(k);
  switch (preset) {
    case Preset::Ones:
      return binomial(N - 1, K - 1);
    case Preset::Fib:
      return binomial(K, N - K);
    case Preset::Odd:
      if ((N - K) % 2 != 0) return 0;
      return binomial((N - K) / 2 + K - 1, K - 1);
    case Preset::Natural:
      return binomial(N + K - 1, 2 * K - 1);
    case Preset::Ge2:
      if (K > N / 2) return 0;
      return binomial(N - K - 1, K - 1);
    case Preset::TwoThree:
      if (K < (N + 2) / 3 || K > N / 2) return 0;
      return binomial(K, N - 2 * K);
    case Preset::Custom:
      break;
  }
  throw std::invalid_argument("no closed form for custom seeds");
}

std::optional<Count> closed_form_cm(Preset preset, unsigned m, std::size_t n,
                                    std::size_t k) {
  if (m < 2) throw std::invalid_argument("closed_form_cm needs m > 1");
  const i64 N = s(n);
  const i64 K = s(k);
  const Integer w = m - 1;
  Count total = 0;
  switch (preset) {
    case Preset::Ones:
      return ipow(m, n - k) * binomial(N - 1, K - 1);
    case Preset::Fib: {
      const i64 lo = std::max<i64>(0, (N + 1) / 2 - K);
      for (i64 j = lo; j <= N - K; ++j) {
        total += ipow(w, j) * binomial(j + K - 1, K - 1) *
                 binomial(j + K, N - j - K);
      }
      return total;
    }
    case Preset::Natural:
      for (i64 i = K; i <= N; ++i) {
        total += ipow(w, i - K) * binomial(i - 1, K - 1) *
                 binomial(N + i - 1, 2 * i - 1);
      }
      return total;
    case Preset::Ge2:
      if (K > N / 2) return Count(0);
      for (i64 j = 0; j <= N / 2 - K; ++j) {
        total += ipow(w, j) * binomial(j + K - 1, K - 1) *
                 binomial(N - K - j - 1, K + j - 1);
      }
      return total;
    case Preset::TwoThree:
      if (K > N / 2) return Count(0);
      for (i64 j = 0; j <= N / 2; ++j) {
        total += ipow(w, j) * binomial(j + K - 1, K - 1) *
                 binomial(K + j, N - 2 * K - 2 * j);
      }
      return total;
    case Preset::Odd:
    case Preset::Custom:
      break;
  }
  return std::nullopt;
}

ClosedFormReport check_closed_forms(Preset preset, std::size_t order,
                                    unsigned max_m) {
  if (preset == Preset::Custom) {
    throw std::invalid_argument("no closed forms for custom seeds");
  }
  ClosedFormReport report;
  report.preset = preset;
  report.order = order;
  const ArithmeticFunction f0 = make_seed({preset, {}}, order);
  for (unsigned m = 1; m <= std::max(1U, max_m); ++m) {
    if (m > 1 && !closed_form_cm(preset, m, 1, 1)) break;
    const CompositionTriangle engine = triangle_recurrence(f0, m, order);
    for (std::size_t n = 1; n <= order; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        ClosedFormEntry entry;
        entry.m = m;
        entry.n = n;
        entry.k = k;
        entry.engine = engine(n, k);
        entry.closed_form = m == 1 ? closed_form_c1(preset, n, k)
                                   : *closed_form_cm(preset, m, n, k);
        entry.pass = entry.engine == entry.closed_form;
        report.entries.push_back(std::move(entry));
      }
    }
  }
  return report;
}

}  // namespace gencomp
