#ifndef BMKIT_COMBINATORICS_HPP
#define BMKIT_COMBINATORICS_HPP

#include "bmkit/rational.hpp"

namespace bmkit {

// n!, memoized per thread. The reference stays valid for the thread's lifetime.
const BigInt& factorial(unsigned n);

// n!/(k!(n-k)!); 0 when k < 0 or k > n, so loosely bounded sums just work.
BigInt binomial(unsigned n, long long k);

// Rising factorial x(x+1)...(x+n-1); empty product 1 when n == 0.
Rational rising_factorial(const Rational& x, unsigned n);

inline BigInt pow2(unsigned n) { return BigInt(1) << n; }

// (1/2)^e, with negative e giving 2^{-e}.
Rational half_pow(int e);

}  // namespace bmkit

#endif  // BMKIT_COMBINATORICS_HPP
