#include "bmkit/rational.hpp"

#include <cctype>

namespace bmkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// [sign]digits, as a BigInt; empty or malformed input throws.
BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer literal");
  // a leading zero would flip the BigInt constructor into octal mode
  const auto first_nonzero = s.find_first_not_of('0');
  if (first_nonzero == std::string_view::npos) return BigInt(0);
  BigInt value{std::string(s.substr(first_nonzero))};
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  std::string_view den_part = text.substr(slash + 1);
  if (!all_digits(den_part)) throw std::invalid_argument("malformed rational denominator");
  return make_rational(std::move(num), parse_integer(den_part));
}

Rational parse_decimal_or_rational(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_rational(text);
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_integer(text));
  std::string digits(text.substr(0, dot));
  std::string_view frac = text.substr(dot + 1);
  if (!frac.empty() && !all_digits(frac)) throw std::invalid_argument("malformed decimal literal");
  digits.append(frac);
  BigInt scaled = parse_integer(digits);
  BigInt scale = 1;
  for (size_t t = 0; t < frac.size(); ++t) scale *= 10;
  return make_rational(std::move(scaled), std::move(scale));
}

bool is_power_of_two(const BigInt& n) {
  if (n <= 0) return false;
  return (n & (n - 1)) == 0;
}

}  // namespace bmkit
