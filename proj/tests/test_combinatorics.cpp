#include "bmkit/combinatorics.hpp"

#include <doctest.h>

#include <bit>
#include <cstdint>

using namespace bmkit;

namespace {

// independent oracle: count k-subsets of an n-set directly
std::uint64_t subsets_of_size(unsigned n, unsigned k) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
    if (std::popcount(mask) == static_cast<int>(k)) ++count;
  return count;
}

}  // namespace

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  // 52! is beyond 64-bit range; spot-check the leading digits via string form
  CHECK(factorial(52).str().substr(0, 8) == "80658175");
}

TEST_CASE("binomial matches subset enumeration") {
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) == subsets_of_size(n, k));
}

TEST_CASE("binomial outside the valid range is zero") {
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial symmetry and Pascal identity") {
  for (unsigned n = 1; n <= 30; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n, n - k));
      CHECK(binomial(n, k) == binomial(n - 1, static_cast<long long>(k) - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(Rational(3), 0) == 1);
  CHECK(rising_factorial(Rational(3), 4) == 360);  // 3*4*5*6
  CHECK(rising_factorial(make_rational(1, 2), 2) == make_rational(3, 4));  // (1/2)(3/2)
  // (1/2)_n 4^n n! = (2n)!
  for (unsigned n = 0; n <= 15; ++n) {
    const Rational lhs =
        rising_factorial(make_rational(1, 2), n) * Rational(pow2(2 * n)) * Rational(factorial(n));
    CHECK(lhs == Rational(factorial(2 * n)));
  }
}

TEST_CASE("pow2 and half_pow") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(10) == 1024);
  CHECK(half_pow(3) == make_rational(1, 8));
  CHECK(half_pow(0) == 1);
  CHECK(half_pow(-2) == 4);
}
