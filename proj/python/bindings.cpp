// Python bindings: expressions, bases, idempotents and verification reports.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bwm/idempotents.hpp"
#include "bwm/parser.hpp"
#include "bwm/serialize.hpp"
#include "bwm/suites.hpp"

namespace py = pybind11;
using namespace bwm;

namespace {

/// Shared exact engine; completion results are cached across calls.
ExactEngine& engine() {
  static ExactEngine eng;
  return eng;
}

Idempotents<ExactRing>& idempotents() {
  static Idempotents<ExactRing> ids(engine());
  return ids;
}

Element<Scalar> evaluate_reduced(const std::string& expr, int n) {
  if (n < 1) throw IndexDomain("rank must be at least 1");
  const auto tree = parse_expr(expr);
  return engine().reduce(evaluate(*tree, idempotents(), n));
}

Variant variant_of(const std::string& name) {
  auto v = parse_variant(name);
  if (!v) throw py::value_error("unknown variant '" + name + "'");
  return *v;
}

std::vector<std::string> basis(int n) {
  if (n < 1) throw IndexDomain("rank must be at least 1");
  std::vector<std::string> out;
  for (const Word& w : engine().enumerate_irreducible(n)) out.push_back(w.empty() ? "1" : w.to_string());
  return out;
}

std::string verify(const std::string& suite, int n, std::uint64_t seed, const std::string& backend,
                   std::uint64_t prime, std::size_t budget) {
  if (n < 2) throw IndexDomain("rank must be at least 2");
  const SuiteOptions so{n, seed, false, budget};
  if (backend == "exact") return run_suite(suite, so).to_json().dump();
  if (backend != "modular") throw py::value_error("backend must be 'exact' or 'modular'");
  if (prime < (std::uint64_t{1} << 30) || !is_probable_prime(prime)) {
    throw py::value_error("prime must be a prime above 2^30");
  }
  return run_suite(suite, PrimePoint::draw(seed, n, prime), so).to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in the BMW algebras BWM_n(r, q)";

  auto base = py::register_exception<Error>(m, "BwmError", PyExc_RuntimeError);
  py::register_exception<SyntaxError>(m, "ExprSyntaxError", base.ptr());
  py::register_exception<RankMismatch>(m, "RankMismatch", base.ptr());
  py::register_exception<IndexDomain>(m, "IndexDomain", base.ptr());
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", base.ptr());
  py::register_exception<ParameterSingular>(m, "ParameterSingular", base.ptr());

  m.attr("DEFAULT_PRIME") = kDefaultPrime;
  m.attr("DEFAULT_BUDGET") = kDefaultBudget;

  m.def("reduce_json", [](const std::string& expr, int n) { return element_to_json(evaluate_reduced(expr, n)).dump(); },
        py::arg("expr"), py::arg("n"), "Normal form of an expression in BWM_n, as JSON text.");
  m.def("reduce_text", [](const std::string& expr, int n) { return evaluate_reduced(expr, n).to_string(); },
        py::arg("expr"), py::arg("n"), "Normal form of an expression in BWM_n, as text.");
  m.def("reduce_expr", [](const std::string& expr, int n) { return element_to_expr(evaluate_reduced(expr, n)); },
        py::arg("expr"), py::arg("n"), "Normal form of an expression, as an expression that parses back.");
  m.def("equal", [](const std::string& a, const std::string& b, int n) {
        return (evaluate_reduced(a, n) - evaluate_reduced(b, n)).is_zero();
      },
      py::arg("lhs"), py::arg("rhs"), py::arg("n"), "Whether two expressions are equal in BWM_n.");
  m.def("basis", &basis, py::arg("n"), "Irreducible words of BWM_n.");
  m.def("dimension", [](int n) { return basis(n).size(); }, py::arg("n"));
  m.def("idempotent_json", [](int n, bool plus, const std::string& variant) {
        return element_to_json(idempotents().idempotent(plus ? Sign::Plus : Sign::Minus, n, variant_of(variant))).dump();
      },
      py::arg("n"), py::arg("plus") = true, py::arg("variant") = "right-b");
  m.def("suite_names", [] { return suite_names(); });
  m.def("verify_json", &verify, py::arg("suite"), py::arg("n"), py::arg("seed") = 1, py::arg("backend") = "exact",
        py::arg("prime") = kDefaultPrime, py::arg("budget") = kDefaultBudget, "Runs a suite; returns the report JSON.",
        py::call_guard<py::gil_scoped_release>());
}
