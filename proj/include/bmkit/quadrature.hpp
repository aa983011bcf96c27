#ifndef BMKIT_QUADRATURE_HPP
#define BMKIT_QUADRATURE_HPP

#include "bmkit/rational.hpp"

#include <functional>

namespace bmkit {

inline constexpr unsigned kMaxQuadratureM = 20;

struct QuadratureResult {
  double value = 0.0;
  // false when some subinterval hit the recursion cap before meeting tolerance
  bool converged = true;
};

// Adaptive Simpson on [a, b] with Richardson error control.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tol);

struct IntegralCheck {
  double numeric = 0.0;      // quadrature of the quartic integral
  double closed_form = 0.0;  // pi P_m(a) / (2^{m+3/2} (a+1)^{m+1/2})
  double abs_err = 0.0;
  bool converged = true;
};

// Cross-checks the quartic integral against its closed form at exact a.
// The semi-infinite range folds through x -> 1/x into
//   int_0^1 (1 + x^{4m+2}) / (x^4 + 2ax^2 + 1)^{m+1} dx,
// integrated to internal tolerance tol/10.
// Requires a > -1, tol > 0, m <= kMaxQuadratureM.
IntegralCheck integral_check(unsigned m, const Rational& a, double tol);

}  // namespace bmkit

#endif  // BMKIT_QUADRATURE_HPP
