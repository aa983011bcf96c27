#ifndef BMKIT_RATIONAL_HPP
#define BMKIT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bmkit {

using BigInt = boost::multiprecision::cpp_int;

// Always in lowest terms with a positive denominator; the sign lives on the
// numerator. Construction normalizes eagerly, so equality is plain
// numerator/denominator comparison.
using Rational = boost::multiprecision::cpp_rational;

// num/den with the sign moved onto the numerator. Throws on den == 0.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

// "p/q" in lowest terms, plain "p" when q == 1 (e.g. "3", "21/8", "-5/2").
inline std::string to_string(const Rational& r) { return r.str(); }

inline std::string to_string(const BigInt& n) { return n.str(); }

// Parses the "p" / "p/q" form produced by to_string.
Rational parse_rational(std::string_view text);

// Accepts "p", "p/q", or a plain decimal such as "-1.5" (read exactly).
Rational parse_decimal_or_rational(std::string_view text);

// True when n == 2^k for some k >= 0.
bool is_power_of_two(const BigInt& n);

}  // namespace bmkit

#endif  // BMKIT_RATIONAL_HPP
