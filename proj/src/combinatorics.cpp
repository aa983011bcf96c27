#include "bmkit/combinatorics.hpp"

#include <deque>

namespace bmkit {

namespace {

// deque keeps references stable while the cache grows
std::deque<BigInt>& factorial_cache() {
  thread_local std::deque<BigInt> cache{BigInt(1)};
  return cache;
}

}  // namespace

const BigInt& factorial(unsigned n) {
  auto& cache = factorial_cache();
  while (cache.size() <= n) cache.push_back(cache.back() * BigInt(cache.size()));
  return cache[n];
}

BigInt binomial(unsigned n, long long k) {
  if (k < 0 || k > static_cast<long long>(n)) return 0;
  const auto uk = static_cast<unsigned>(k);
  return factorial(n) / (factorial(uk) * factorial(n - uk));
}

Rational rising_factorial(const Rational& x, unsigned n) {
  Rational product(1);
  Rational term = x;
  for (unsigned t = 0; t < n; ++t, term += 1) product *= term;
  return product;
}

Rational half_pow(int e) {
  if (e >= 0) return make_rational(1, pow2(static_cast<unsigned>(e)));
  return Rational(pow2(static_cast<unsigned>(-e)));
}

}  // namespace bmkit
