#include "bmkit/tables.hpp"

#include "bmkit/combinatorics.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace bmkit {

namespace {

// 2^k C(2m-2k, m-k) C(m+k, k), the k-th single-sum coefficient of (a+1)^k;
// d_i(m) = 2^{-2m} sum_k c_k C(k, i).
std::vector<BigInt> single_sum_coefficients(unsigned m) {
  std::vector<BigInt> c(m + 1);
  for (unsigned k = 0; k <= m; ++k)
    c[k] = pow2(k) * binomial(2 * m - 2 * k, m - k) * binomial(m + k, k);
  return c;
}

BigInt d_numerator(const std::vector<BigInt>& c, unsigned i) {
  BigInt sum = 0;
  for (unsigned k = i; k < c.size(); ++k) sum += c[k] * binomial(k, i);
  return sum;
}

void require_little_d(const CoefficientTable& d) {
  if (d.kind != TableKind::LittleD)
    throw std::invalid_argument("expected a little-d table, got a big-D table");
  if (d.values.size() != d.m + 1)
    throw std::invalid_argument("coefficient table length does not match m");
}

void require_interior_index(unsigned m, unsigned i) {
  if (m < 2 || i < 1 || i > m - 1)
    throw std::out_of_range("index i must satisfy 1 <= i <= m-1 (m >= 2)");
}

}  // namespace

CoefficientTable d_coeffs(unsigned m) {
  const auto c = single_sum_coefficients(m);
  const BigInt denom = pow2(2 * m);
  CoefficientTable t{m, TableKind::LittleD, {}};
  t.values.reserve(m + 1);
  for (unsigned i = 0; i <= m; ++i) t.values.push_back(make_rational(d_numerator(c, i), denom));
  return t;
}

CoefficientTable d_coeffs_from_single(unsigned m) {
  const auto c = single_sum_coefficients(m);
  // accumulate c_k (a+1)^k, carrying (a+1)^k by repeated Pascal-style updates
  std::vector<BigInt> acc(m + 1, BigInt(0));
  std::vector<BigInt> pow{BigInt(1)};
  for (unsigned k = 0; k <= m; ++k) {
    for (unsigned t = 0; t <= k; ++t) acc[t] += c[k] * pow[t];
    pow.push_back(pow.back());
    for (unsigned t = k; t >= 1; --t) pow[t] += pow[t - 1];
  }
  const BigInt denom = pow2(2 * m);
  CoefficientTable t{m, TableKind::LittleD, {}};
  t.values.reserve(m + 1);
  for (unsigned i = 0; i <= m; ++i) t.values.push_back(make_rational(acc[i], denom));
  return t;
}

CoefficientTable d_coeffs_by_recurrence(unsigned m) {
  const auto c = single_sum_coefficients(m);
  const BigInt denom = pow2(2 * m);
  CoefficientTable t{m, TableKind::LittleD, {}};
  t.values.reserve(m + 1);
  t.values.push_back(make_rational(d_numerator(c, 0), denom));
  if (m == 0) return t;
  t.values.push_back(make_rational(d_numerator(c, 1), denom));
  // i(i+1) d_{i+1} = i(2m+1) d_i - (m-i+1)(m+i) d_{i-1}, stepping up in i;
  // the division is exact in rationals
  for (unsigned i = 1; i + 1 <= m; ++i) {
    Rational next = Rational(BigInt(i) * (2 * m + 1)) * t.values[i] -
                    Rational(BigInt(m - i + 1) * (m + i)) * t.values[i - 1];
    next /= Rational(BigInt(i) * (i + 1));
    t.values.push_back(std::move(next));
  }
  return t;
}

Rational p_eval_single(unsigned m, const Rational& a) {
  const auto c = single_sum_coefficients(m);
  const Rational base = a + 1;
  Rational pow(1), sum(0);
  for (unsigned k = 0; k <= m; ++k, pow *= base) sum += Rational(c[k]) * pow;
  return sum / Rational(pow2(2 * m));
}

Rational p_eval_double(unsigned m, const Rational& a) {
  // sum over j,k of C(2m+1,2j) C(m-j,k) C(2k+2j,k+j) ((a+1)/8)^j ((a-1)/8)^k
  const Rational tplus = (a + 1) / 8;
  const Rational tminus = (a - 1) / 8;
  Rational sum(0);
  Rational pj(1);
  for (unsigned j = 0; j <= m; ++j, pj *= tplus) {
    const BigInt cj = binomial(2 * m + 1, 2 * j);
    Rational pk(1);
    for (unsigned k = 0; k + j <= m; ++k, pk *= tminus)
      sum += Rational(cj * binomial(m - j, k) * binomial(2 * k + 2 * j, k + j)) * pj * pk;
  }
  return sum;
}

Rational p_eval_table(const CoefficientTable& d, const Rational& a) {
  require_little_d(d);
  Rational acc = d.values.back();
  for (size_t i = d.values.size() - 1; i-- > 0;) acc = acc * a + d.values[i];
  return acc;
}

CoefficientTable big_d_from_d(const CoefficientTable& d) {
  require_little_d(d);
  const unsigned m = d.m;
  CoefficientTable t{m, TableKind::BigD, {}};
  t.values.reserve(m + 1);
  for (unsigned i = 0; i <= m; ++i) {
    BigInt scale = binomial(2 * m, m - i) * factorial(m) * factorial(i) * factorial(m - i) * pow2(i);
    t.values.push_back(Rational(std::move(scale)) * d.values[i]);
  }
  return t;
}

CoefficientTable big_d_single_sum(unsigned m) {
  // rf[n] = (1/2)_n
  std::vector<Rational> rf(m + 1);
  rf[0] = 1;
  for (unsigned n = 1; n <= m; ++n) rf[n] = rf[n - 1] * make_rational(2 * BigInt(n) - 1, 2);
  CoefficientTable t{m, TableKind::BigD, {}};
  t.values.reserve(m + 1);
  for (unsigned i = 0; i <= m; ++i) {
    Rational sum(0);
    for (unsigned j = 0; j + i <= m; ++j)
      sum += Rational(binomial(m - i, j)) * half_pow(static_cast<int>(j)) * rf[m - i - j] *
             Rational(factorial(m + i + j));
    t.values.push_back(Rational(binomial(2 * m, m - i)) * sum);
  }
  return t;
}

Rational big_d_recurrence_residual(const CoefficientTable& D, unsigned i) {
  if (D.kind != TableKind::BigD) throw std::invalid_argument("expected a big-D table");
  require_interior_index(D.m, i);
  const unsigned m = D.m;
  return make_rational(m + i + 1, 2) * D.values[i + 1] + Rational(2 * BigInt(m - i + 1)) * D.values[i - 1] -
         Rational(BigInt(2 * m + 1)) * D.values[i];
}

Rational big_d_recurrence_residual(unsigned m, unsigned i) {
  return big_d_recurrence_residual(big_d_from_d(d_coeffs(m)), i);
}

bool LogConcavityReport::all_nonnegative() const {
  for (const auto& margin : margins)
    if (margin < 0) return false;
  return true;
}

LogConcavityReport check_log_concavity(const CoefficientTable& d) {
  require_little_d(d);
  LogConcavityReport report{d.m, {}};
  for (unsigned i = 1; i + 1 <= d.m; ++i)
    report.margins.push_back(d.values[i] * d.values[i] - d.values[i - 1] * d.values[i + 1]);
  return report;
}

LogConcavityReport check_log_concavity(unsigned m) { return check_log_concavity(d_coeffs(m)); }

std::pair<Rational, Rational> big_d_product_inequality(const CoefficientTable& D, unsigned i) {
  if (D.kind != TableKind::BigD) throw std::invalid_argument("expected a big-D table");
  require_interior_index(D.m, i);
  const unsigned m = D.m;
  Rational lhs = Rational(BigInt(m + i + 1) * (m - i + 1)) * D.values[i + 1] * D.values[i - 1];
  Rational rhs = Rational(BigInt(m + i) * (m - i + 1)) * D.values[i] * D.values[i];
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Rational, Rational> big_d_product_inequality(unsigned m, unsigned i) {
  return big_d_product_inequality(big_d_from_d(d_coeffs(m)), i);
}

bool is_unimodal(const CoefficientTable& t) {
  size_t i = 0;
  const size_t n = t.values.size();
  while (i + 1 < n && t.values[i] <= t.values[i + 1]) ++i;
  while (i + 1 < n && t.values[i] >= t.values[i + 1]) ++i;
  return i + 1 >= n;
}

bool check_unimodality(unsigned m) { return is_unimodal(d_coeffs(m)); }

std::pair<Rational, Rational> identity_a1(unsigned m) {
  Rational lhs(0), rhs(0);
  for (unsigned k = 0; k <= m; ++k) {
    const Rational central = make_rational(binomial(2 * k, k), pow2(2 * k));
    lhs += central * Rational(binomial(2 * m - k, m));
    rhs += central * Rational(binomial(2 * m + 1, 2 * k));
  }
  return {std::move(lhs), std::move(rhs)};
}

std::string table_to_tsv(const CoefficientTable& t) {
  std::ostringstream out;
  for (size_t i = 0; i < t.values.size(); ++i) out << i << '\t' << to_string(t.values[i]) << '\n';
  return out.str();
}

std::string table_to_json(const CoefficientTable& t) {
  nlohmann::ordered_json j;
  j["m"] = t.m;
  j["kind"] = t.kind == TableKind::LittleD ? "d" : "D";
  auto values = nlohmann::ordered_json::array();
  for (const auto& v : t.values) values.push_back(to_string(v));
  j["values"] = std::move(values);
  return j.dump();
}

}  // namespace bmkit
