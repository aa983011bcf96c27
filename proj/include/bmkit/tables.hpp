#ifndef BMKIT_TABLES_HPP
#define BMKIT_TABLES_HPP

#include "bmkit/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bmkit {

enum class TableKind { LittleD, BigD };

// One coefficient row: d_0(m)..d_m(m) or the rescaled D_0(m)..D_m(m).
// All entries are positive dyadic rationals; values.size() == m + 1.
struct CoefficientTable {
  unsigned m = 0;
  TableKind kind = TableKind::LittleD;
  std::vector<Rational> values;

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

// The d-row by three independent routes. All three must agree entrywise:
//   d_coeffs: direct coefficient sum with binomial products
//   d_coeffs_from_single: expansion of the single sum in powers of (a+1)
//   d_coeffs_by_recurrence: d_0, d_1 seeded closed-form, rest by the
//                           three-term recurrence in i
CoefficientTable d_coeffs(unsigned m);
CoefficientTable d_coeffs_from_single(unsigned m);
CoefficientTable d_coeffs_by_recurrence(unsigned m);

// P_m(a), exactly, by the single-sum and by the double-sum formula.
Rational p_eval_single(unsigned m, const Rational& a);
Rational p_eval_double(unsigned m, const Rational& a);

// Horner evaluation over an already computed little-d row.
Rational p_eval_table(const CoefficientTable& d, const Rational& a);

// D_i(m) = C(2m, m-i) m! i! (m-i)! 2^i d_i(m). Throws std::invalid_argument
// when the input is not a little-d row.
CoefficientTable big_d_from_d(const CoefficientTable& d);

// D_i(m) = C(2m, m-i) sum_j C(m-i, j) (1/2)^j (1/2)_{m-i-j} (m+i+j)!
CoefficientTable big_d_single_sum(unsigned m);

// Residual of (1/2)(m+i+1) D_{i+1} + 2(m-i+1) D_{i-1} - (2m+1) D_i,
// for 1 <= i <= m-1; zero when the row satisfies the recurrence.
Rational big_d_recurrence_residual(const CoefficientTable& D, unsigned i);
Rational big_d_recurrence_residual(unsigned m, unsigned i);

struct LogConcavityReport {
  unsigned m = 0;
  // margins[i-1] = d_i^2 - d_{i-1} d_{i+1} for i = 1..m-1; empty when m < 2
  std::vector<Rational> margins;
  bool all_nonnegative() const;
};
LogConcavityReport check_log_concavity(const CoefficientTable& d);
LogConcavityReport check_log_concavity(unsigned m);

// Both sides of the strict inequality
//   (m+i+1) D_{i+1} (m-i+1) D_{i-1}  <  (m+i)(m-i+1) D_i^2
// as (lhs, rhs), for 1 <= i <= m-1.
std::pair<Rational, Rational> big_d_product_inequality(const CoefficientTable& D, unsigned i);
std::pair<Rational, Rational> big_d_product_inequality(unsigned m, unsigned i);

// True when the row rises to a peak and then falls (ties allowed).
bool is_unimodal(const CoefficientTable& t);
bool check_unimodality(unsigned m);

// (lhs, rhs) of
//   sum_k 4^{-k} C(2k,k) C(2m-k,m)  =  sum_k 4^{-k} C(2k,k) C(2m+1,2k),
// both sides also equal to P_m(1).
std::pair<Rational, Rational> identity_a1(unsigned m);

// "i<TAB>p/q" rows / {"m":..,"kind":"d"|"D","values":["p/q",..]}
std::string table_to_tsv(const CoefficientTable& t);
std::string table_to_json(const CoefficientTable& t);

}  // namespace bmkit

#endif  // BMKIT_TABLES_HPP
