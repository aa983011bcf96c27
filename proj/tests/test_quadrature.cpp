#include "bmkit/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace bmkit;

TEST_CASE("adaptive simpson on elementary integrals") {
  const auto cubic = adaptive_simpson([](double x) { return x * x * x; }, 0.0, 2.0, 1e-12);
  CHECK(cubic.converged);
  CHECK(std::abs(cubic.value - 4.0) < 1e-10);

  const auto sine = adaptive_simpson([](double x) { return std::sin(x); }, 0.0,
                                     std::numbers::pi, 1e-12);
  CHECK(sine.converged);
  CHECK(std::abs(sine.value - 2.0) < 1e-10);
}

TEST_CASE("quartic integral anchor values") {
  // m = 0, a = 1: the integrand is 1/(x^2+1)^2 folded, total pi/4
  const auto unit = integral_check(0, Rational(1), 1e-10);
  CHECK(unit.converged);
  CHECK(std::abs(unit.closed_form - std::numbers::pi / 4) < 1e-15);
  CHECK(unit.abs_err < 1e-10);

  // m = 0, a = 0: pi / (2 sqrt 2)
  const auto zero = integral_check(0, Rational(0), 1e-10);
  CHECK(zero.converged);
  CHECK(std::abs(zero.closed_form - std::numbers::pi / (2 * std::sqrt(2.0))) < 1e-15);
  CHECK(zero.abs_err < 1e-10);

  // m = 1, a = 1: pi P_1(1) / 16 = 5 pi / 32
  const auto one = integral_check(1, Rational(1), 1e-10);
  CHECK(std::abs(one.closed_form - 5 * std::numbers::pi / 32) < 1e-14);
  CHECK(one.abs_err < 1e-10);
}

TEST_CASE("quadrature tracks the closed form across the acceptance grid") {
  const Rational points[] = {Rational(0), make_rational(1, 2), Rational(1), Rational(2)};
  for (unsigned m = 0; m <= 5; ++m)
    for (const auto& a : points) {
      const auto check = integral_check(m, a, 1e-10);
      CHECK(check.converged);
      CHECK(check.abs_err <= 1e-8);
    }
}

TEST_CASE("integral_check argument guards") {
  CHECK_THROWS_AS(integral_check(0, Rational(-1), 1e-8), std::domain_error);
  CHECK_THROWS_AS(integral_check(0, Rational(-2), 1e-8), std::domain_error);
  CHECK_THROWS_AS(integral_check(kMaxQuadratureM + 1, Rational(1), 1e-8), std::domain_error);
  CHECK_THROWS_AS(integral_check(0, Rational(1), 0.0), std::invalid_argument);
}
