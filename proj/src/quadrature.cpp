#include "bmkit/quadrature.hpp"

#include "bmkit/tables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bmkit {

namespace {

constexpr int kMaxDepth = 48;

double simpson(double h, double fa, double fm, double fb) { return (fa + 4.0 * fm + fb) * h / 6.0; }

double simpson_adaptive(const std::function<double(double)>& f, double a, double m, double b,
                        double fa, double fm, double fb, double whole, double tol, int depth,
                        bool& converged) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(m - a, fa, flm, fm);
  const double right = simpson(b - m, fm, frm, fb);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol || depth >= kMaxDepth) {
    if (depth >= kMaxDepth && std::abs(err) > tol) converged = false;
    return left + right + err;
  }
  return simpson_adaptive(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1, converged) +
         simpson_adaptive(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1, converged);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tol) {
  QuadratureResult result;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(b - a, fa, fm, fb);
  result.value = simpson_adaptive(f, a, m, b, fa, fm, fb, whole, tol, 0, result.converged);
  return result;
}

IntegralCheck integral_check(unsigned m, const Rational& a, double tol) {
  if (a <= -1) throw std::domain_error("integral check requires a > -1");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (m > kMaxQuadratureM) throw std::domain_error("m too large for stable quadrature");

  const double ad = a.convert_to<double>();
  const int tail_power = static_cast<int>(4 * m + 2);
  const int denom_power = static_cast<int>(m + 1);
  auto integrand = [=](double x) {
    const double x2 = x * x;
    const double base = x2 * x2 + 2.0 * ad * x2 + 1.0;
    return (1.0 + std::pow(x, tail_power)) / std::pow(base, denom_power);
  };

  IntegralCheck check;
  const auto quad = adaptive_simpson(integrand, 0.0, 1.0, tol / 10.0);
  check.numeric = quad.value;
  check.converged = quad.converged;

  // 2^{m+3/2} (a+1)^{m+1/2} == 2 (2(a+1))^{m+1/2}
  const double p_value = p_eval_single(m, a).convert_to<double>();
  check.closed_form =
      std::numbers::pi * p_value / (2.0 * std::pow(2.0 * (ad + 1.0), m + 0.5));
  check.abs_err = std::abs(check.numeric - check.closed_form);
  return check;
}

}  // namespace bmkit
