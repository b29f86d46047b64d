#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gencomp/bell.hpp"
#include "gencomp/errors.hpp"
#include "gencomp/identities.hpp"
#include "gencomp/pascal.hpp"
#include "gencomp/sequences.hpp"
#include "gencomp/triangle.hpp"
#include "gencomp/words.hpp"

namespace py = pybind11;

// Exact integers cross the boundary as Python ints via their decimal form.
namespace pybind11::detail {
template <>
struct type_caster<gencomp::Integer> {
  PYBIND11_TYPE_CASTER(gencomp::Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = gencomp::Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const gencomp::Integer& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace gencomp;

Preset to_preset(const std::string& name) {
  const auto p = parse_preset(name);
  if (!p) throw py::value_error("unknown preset '" + name + "'");
  return *p;
}

Restriction to_restriction(const std::string& name) {
  for (auto r : {Restriction::None, Restriction::IsolatedZeros,
                 Restriction::NoOddZeroRuns, Restriction::Avoid01,
                 Restriction::IsolatedNonzeros,
                 Restriction::ZeroFramedBounded}) {
    if (restriction_name(r) == name) return r;
  }
  throw py::value_error("unknown restriction '" + name + "'");
}

ArithmeticFunction seed_of(const std::string& preset, std::size_t n) {
  return make_seed({to_preset(preset), {}}, n);
}

std::vector<Integer> to_list(const ArithmeticFunction& f) {
  return {f.values().begin(), f.values().end()};
}

ArithmeticFunction from_list(const std::vector<Integer>& values) {
  return ArithmeticFunction(values, "python");
}

std::vector<std::vector<Integer>> rows_of(const CompositionTriangle& t) {
  std::vector<std::vector<Integer>> rows;
  for (std::size_t n = 1; n <= t.order(); ++n) {
    rows.emplace_back(t.row(n).begin(), t.row(n).end());
  }
  return rows;
}

std::vector<std::vector<Integer>> rows_of(const LowerTriangularMatrix& a) {
  std::vector<std::vector<Integer>> rows(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i) {
    for (std::size_t j = 1; j <= i; ++j) rows[i - 1].push_back(a(i, j));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized composition numbers, invert transforms and "
            "restricted-word counts";

  py::register_exception<InsufficientSeedError>(m, "InsufficientSeedError",
                                                PyExc_ValueError);
  py::register_exception<InvalidSeedError>(m, "InvalidSeedError",
                                           PyExc_ValueError);
  py::register_exception<EnumerationTooLargeError>(
      m, "EnumerationTooLargeError", PyExc_RuntimeError);

  m.attr("DEFAULT_BUDGET") = kDefaultEnumerationBudget;

  m.def("make_seed", [](const std::string& preset, std::size_t n) {
    return to_list(seed_of(preset, n));
  }, py::arg("preset"), py::arg("n"));

  m.def("invert_transform", [](const std::vector<Integer>& f) {
    return to_list(invert_transform(from_list(f)));
  }, py::arg("f"));

  m.def("iterate_invert", [](const std::vector<Integer>& f0, unsigned times) {
    return to_list(iterate_invert(from_list(f0), times));
  }, py::arg("f0"), py::arg("m"));

  m.def("f_via_triangle",
        [](const std::vector<Integer>& f0, unsigned times, std::size_t n) {
          return f_via_triangle(from_list(f0), times, n);
        },
        py::arg("f0"), py::arg("m"), py::arg("n"));

  m.def("triangle",
        [](const std::vector<Integer>& f0, unsigned times, std::size_t order,
           const std::string& algo) {
          const auto a = parse_algorithm(algo);
          if (!a) throw py::value_error("unknown algorithm '" + algo + "'");
          return rows_of(build_triangle(*a, from_list(f0), times, order));
        },
        py::arg("f0"), py::arg("m"), py::arg("N"),
        py::arg("algo") = "recurrence");

  m.def("extended_binomial",
        [](const std::vector<Integer>& f, std::size_t k, std::size_t n) {
          return extended_binomial(from_list(f), k, n);
        },
        py::arg("f"), py::arg("k"), py::arg("n"));

  m.def("partial_bell",
        [](const std::vector<Integer>& x, std::size_t n, std::size_t k) {
          return partial_bell(BellArguments(x), n, k);
        },
        py::arg("x"), py::arg("n"), py::arg("k"));

  m.def("bell_invert_identity_check",
        [](const std::vector<Integer>& x, std::size_t order) {
          return bell_invert_identity_check(BellArguments(x), order);
        },
        py::arg("x"), py::arg("N"));

  m.def("pascal_lower", [](std::size_t n) { return rows_of(pascal_lower(n)); },
        py::arg("n"));
  m.def("pascal_power", [](std::size_t n, std::uint64_t e) {
    return rows_of(mat_pow(pascal_lower(n), e));
  }, py::arg("n"), py::arg("e"));

  m.def("check_word",
        [](const std::vector<unsigned>& letters, const std::string& r) {
          std::vector<Letter> w(letters.begin(), letters.end());
          return check(w, to_restriction(r));
        },
        py::arg("letters"), py::arg("restriction"));

  m.def("count_words",
        [](unsigned alphabet, std::size_t length, const std::string& r,
           std::optional<unsigned> marked_letter,
           std::optional<std::size_t> marked_count, std::uint64_t budget) {
          WordModel model{alphabet, length, to_restriction(r), marked_letter,
                          marked_count};
          return count_words(model, budget);
        },
        py::arg("alphabet"), py::arg("length"),
        py::arg("restriction") = "none", py::arg("marked_letter") = py::none(),
        py::arg("marked_count") = py::none(),
        py::arg("budget") = kDefaultEnumerationBudget);

  m.def("composition_to_word", [](const std::vector<unsigned>& parts) {
    const auto w = composition_to_word(parts);
    return std::vector<unsigned>(w.letters().begin(), w.letters().end());
  }, py::arg("parts"));
  m.def("word_to_composition", [](const std::vector<unsigned>& letters) {
    std::vector<Letter> w(letters.begin(), letters.end());
    return word_to_composition(Word(std::move(w), 2));
  }, py::arg("letters"));

  m.def("oracle_c",
        [](const std::string& preset, unsigned times, std::size_t n,
           std::size_t k, std::uint64_t budget) {
          return oracle_c(to_preset(preset), times, n, k, budget);
        },
        py::arg("preset"), py::arg("m"), py::arg("n"), py::arg("k"),
        py::arg("budget") = kDefaultEnumerationBudget);

  m.def("check_id", &check_id, py::arg("n"), py::arg("k"));
  m.def("check_cp", &check_cp, py::arg("m"), py::arg("n"), py::arg("k"));
  m.def("check_euler_type", &check_euler_type, py::arg("n"), py::arg("k"),
        py::arg("budget") = kDefaultEnumerationBudget);
  m.def("check_chebyshev", &check_chebyshev, py::arg("n"), py::arg("k"),
        py::arg("budget") = kDefaultEnumerationBudget);
  m.def("chebyshev_U", [](std::size_t d) { return chebyshev_U(d).coefficients(); },
        py::arg("d"));
  m.def("check_closed_forms",
        [](const std::string& preset, std::size_t order, unsigned max_m) {
          return check_closed_forms(to_preset(preset), order, max_m).all_pass();
        },
        py::arg("preset"), py::arg("N"), py::arg("max_m") = 1);
}
