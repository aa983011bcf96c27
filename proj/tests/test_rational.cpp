#include "bmkit/rational.hpp"

#include <doctest.h>

using namespace bmkit;

TEST_CASE("make_rational normalizes sign and lowest terms") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(-6, -4)) == "3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("parse_rational reads what to_string writes") {
  CHECK(parse_rational("21/8") == make_rational(21, 8));
  CHECK(parse_rational("-5/2") == make_rational(-5, 2));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-12") == Rational(-12));
  CHECK(parse_rational("6/4") == make_rational(3, 2));

  const Rational samples[] = {make_rational(77, 16), Rational(0), Rational(-7),
                              make_rational(-43, 4)};
  for (const auto& r : samples) CHECK(parse_rational(to_string(r)) == r);
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
}

TEST_CASE("parse_decimal_or_rational reads decimals exactly") {
  CHECK(parse_decimal_or_rational("-1.5") == make_rational(-3, 2));
  CHECK(parse_decimal_or_rational("0.25") == make_rational(1, 4));
  CHECK(parse_decimal_or_rational("2.") == Rational(2));
  CHECK(parse_decimal_or_rational("0.0") == Rational(0));
  // leading zeros must stay decimal, never octal
  CHECK(parse_decimal_or_rational("007") == Rational(7));
  CHECK(parse_rational("007/025") == make_rational(7, 25));
  CHECK(parse_decimal_or_rational("3") == Rational(3));
  CHECK(parse_decimal_or_rational("1/2") == make_rational(1, 2));
  CHECK_THROWS_AS(parse_decimal_or_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_decimal_or_rational("x"), std::invalid_argument);
}

TEST_CASE("is_power_of_two") {
  CHECK(is_power_of_two(BigInt(1)));
  CHECK(is_power_of_two(BigInt(2)));
  CHECK(is_power_of_two(BigInt(1) << 100));
  CHECK_FALSE(is_power_of_two(BigInt(0)));
  CHECK_FALSE(is_power_of_two(BigInt(-4)));
  CHECK_FALSE(is_power_of_two(BigInt(12)));
}
