// Python face of the library. Exact values cross the boundary as
// fractions.Fraction (never float); floats are rejected on input so nobody
// feeds a rounded a into an exact computation by accident.

#include "bmkit/perm_model.hpp"
#include "bmkit/quadrature.hpp"
#include "bmkit/rational.hpp"
#include "bmkit/tables.hpp"

#include <pybind11/pybind11.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace bmkit;

namespace {

const py::object& fraction_class() {
  static const py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

py::object to_fraction(const Rational& r) { return fraction_class()(to_string(r)); }

py::list to_fraction_list(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_fraction(v));
  return out;
}

Rational rational_from(py::handle h) {
  if (py::isinstance<py::bool_>(h)) throw py::type_error("expected int, str 'p/q', or Fraction");
  if (py::isinstance<py::int_>(h)) return Rational(BigInt(py::str(h).cast<std::string>()));
  if (py::isinstance<py::float_>(h))
    throw py::type_error("floats are inexact here; pass int, str 'p/q', or Fraction");
  if (py::isinstance<py::str>(h)) return parse_decimal_or_rational(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    BigInt num(py::str(h.attr("numerator")).cast<std::string>());
    BigInt den(py::str(h.attr("denominator")).cast<std::string>());
    return make_rational(std::move(num), std::move(den));
  }
  throw py::type_error("expected int, str 'p/q', or Fraction");
}

TableKind kind_from(const std::string& kind) {
  if (kind == "d") return TableKind::LittleD;
  if (kind == "D") return TableKind::BigD;
  throw py::value_error("kind must be 'd' or 'D'");
}

CoefficientTable table_for(unsigned m, TableKind kind) {
  return kind == TableKind::LittleD ? d_coeffs(m) : big_d_from_d(d_coeffs(m));
}

Family family_from(const std::string& name) {
  if (name.size() == 1) switch (name[0]) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      default: break;
    }
  throw py::value_error("family must be one of 'A', 'B', 'C', 'D'");
}

}  // namespace

PYBIND11_MODULE(_bmkit, mod) {
  mod.doc() = "Exact coefficient tables, verification sweeps, and the enumeration oracle";

  mod.def(
      "d_coeffs", [](unsigned m) { return to_fraction_list(d_coeffs(m).values); }, py::arg("m"),
      "Coefficients d_0(m)..d_m(m) as Fractions");

  mod.def(
      "big_d", [](unsigned m) { return to_fraction_list(big_d_from_d(d_coeffs(m)).values); },
      py::arg("m"), "Rescaled coefficients D_0(m)..D_m(m) as Fractions");

  mod.def(
      "p_eval",
      [](unsigned m, py::handle a) { return to_fraction(p_eval_single(m, rational_from(a))); },
      py::arg("m"), py::arg("a"), "P_m(a) exactly; a may be int, 'p/q' string, or Fraction");

  mod.def(
      "log_concavity_margins",
      [](unsigned m) { return to_fraction_list(check_log_concavity(m).margins); }, py::arg("m"),
      "d_i^2 - d_{i-1} d_{i+1} for i = 1..m-1");

  mod.def(
      "recurrence_residual",
      [](unsigned m, unsigned i) { return to_fraction(big_d_recurrence_residual(m, i)); },
      py::arg("m"), py::arg("i"), "Residual of the three-term recurrence at (m, i)");

  mod.def(
      "product_inequality",
      [](unsigned m, unsigned i) {
        const auto [lhs, rhs] = big_d_product_inequality(m, i);
        return py::make_tuple(to_fraction(lhs), to_fraction(rhs));
      },
      py::arg("m"), py::arg("i"), "(lhs, rhs) of the strict product inequality; lhs < rhs");

  mod.def("check_unimodality", &check_unimodality, py::arg("m"));

  mod.def(
      "identity_a1",
      [](unsigned m) {
        const auto [lhs, rhs] = identity_a1(m);
        return py::make_tuple(to_fraction(lhs), to_fraction(rhs));
      },
      py::arg("m"), "Both central-binomial sums; each equals P_m(1)");

  mod.def(
      "integral_check",
      [](unsigned m, py::handle a, double tol) {
        const IntegralCheck check = integral_check(m, rational_from(a), tol);
        py::dict out;
        out["numeric"] = check.numeric;
        out["closed_form"] = check.closed_form;
        out["abs_err"] = check.abs_err;
        out["converged"] = check.converged;
        return out;
      },
      py::arg("m"), py::arg("a"), py::arg("tol") = 1e-8,
      "Quadrature of the quartic integral against its closed form");

  mod.def(
      "family_weight",
      [](unsigned m, unsigned i, const std::string& family, unsigned max_m) {
        return to_fraction(family_weight(m, i, family_from(family), max_m));
      },
      py::arg("m"), py::arg("i"), py::arg("family"), py::arg("max_m") = kDefaultEnumerationMaxM,
      "Total weight of one enumerated family");

  mod.def(
      "_verify_model_json",
      [](unsigned m, unsigned max_m) { return report_to_json(verify_model(m, max_m)).dump(); },
      py::arg("m"), py::arg("max_m") = kDefaultEnumerationMaxM);

  mod.def(
      "table_tsv",
      [](unsigned m, const std::string& kind) { return table_to_tsv(table_for(m, kind_from(kind))); },
      py::arg("m"), py::arg("kind") = "d");

  mod.def(
      "table_json",
      [](unsigned m, const std::string& kind) { return table_to_json(table_for(m, kind_from(kind))); },
      py::arg("m"), py::arg("kind") = "d");

  mod.attr("DEFAULT_ENUMERATION_MAX_M") = kDefaultEnumerationMaxM;
}
