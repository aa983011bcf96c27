// bmkit: tables, verification sweeps, enumeration oracle, quadrature check.
// Data goes to stdout, diagnostics to stderr. Exit 0 = all checks pass,
// 1 = a check failed, 2 = invalid arguments.

#include "bmkit/combinatorics.hpp"
#include "bmkit/perm_model.hpp"
#include "bmkit/quadrature.hpp"
#include "bmkit/rational.hpp"
#include "bmkit/report.hpp"
#include "bmkit/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

using namespace bmkit;

struct MRange {
  unsigned lo = 0;
  unsigned hi = 0;
};

unsigned parse_unsigned(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number in --m");
  for (char c : text)
    if (c < '0' || c > '9') throw std::invalid_argument("malformed number in --m: " + text);
  const unsigned long value = std::stoul(text);
  if (value > 1000000) throw std::invalid_argument("--m out of range: " + text);
  return static_cast<unsigned>(value);
}

// "N" or inclusive "lo..hi"
MRange parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  MRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_unsigned(text);
    return r;
  }
  r.lo = parse_unsigned(text.substr(0, dots));
  r.hi = parse_unsigned(text.substr(dots + 2));
  if (r.lo > r.hi) throw std::invalid_argument("--m range has lower > upper");
  return r;
}

std::string sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string token;
  for (char c : csv) {
    if (c == ',') {
      if (!token.empty()) out.push_back(token);
      token.clear();
    } else {
      token += c;
    }
  }
  if (!token.empty()) out.push_back(token);
  return out;
}

const std::vector<std::string> kAllChecks = {"formulas",   "recurrence", "logconcavity",
                                             "unimodality", "a1",         "section4"};

// ---- table ----------------------------------------------------------------

int cmd_table(const MRange& range, const std::string& kind, const std::string& format) {
  const bool big = kind == "D";
  std::string tsv;
  auto blocks = nlohmann::ordered_json::array();
  for (unsigned m = range.lo; m <= range.hi; ++m) {
    const CoefficientTable t = big ? big_d_from_d(d_coeffs(m)) : d_coeffs(m);
    if (format == "tsv") {
      if (range.lo != range.hi)
        tsv += "# m=" + std::to_string(m) + " kind=" + kind + "\n";
      tsv += table_to_tsv(t);
    } else {
      blocks.push_back(nlohmann::ordered_json::parse(table_to_json(t)));
    }
  }
  if (format == "tsv") {
    std::fputs(tsv.c_str(), stdout);
  } else {
    const std::string out =
        range.lo == range.hi ? blocks.front().dump() : blocks.dump();
    std::fputs(out.c_str(), stdout);
    std::fputc('\n', stdout);
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

void append_formulas_checks(unsigned m, std::vector<CheckResult>& rows) {
  CheckResult row{"formulas", m, -1, "agree", "agree", true, ""};
  const auto direct = d_coeffs(m);
  if (d_coeffs_from_single(m) != direct || d_coeffs_by_recurrence(m) != direct) {
    row.observed = "disagree";
    row.pass = false;
    row.witness = "coefficient routes differ";
  } else {
    const Rational points[] = {Rational(-2),        Rational(-1), Rational(0),
                               make_rational(1, 2), Rational(1),  Rational(3)};
    for (const auto& a : points) {
      const Rational via_table = p_eval_table(direct, a);
      if (p_eval_single(m, a) != via_table || p_eval_double(m, a) != via_table) {
        row.observed = "disagree";
        row.pass = false;
        row.witness = "evaluations differ at a=" + to_string(a);
        break;
      }
    }
  }
  rows.push_back(std::move(row));
}

void append_verify_checks(unsigned m, const std::vector<std::string>& checks,
                          std::vector<CheckResult>& rows) {
  for (const auto& check : checks) {
    if (check == "formulas") {
      append_formulas_checks(m, rows);
    } else if (check == "recurrence") {
      if (m < 2) continue;
      const auto D = big_d_from_d(d_coeffs(m));
      for (unsigned i = 1; i + 1 <= m; ++i) {
        const Rational residual = big_d_recurrence_residual(D, i);
        rows.push_back(CheckResult{"recurrence", m, static_cast<int>(i), "0",
                                   to_string(residual), residual == 0, ""});
      }
    } else if (check == "logconcavity") {
      const auto report = check_log_concavity(m);
      for (unsigned i = 1; i + 1 <= m; ++i) {
        const Rational& margin = report.margins[i - 1];
        rows.push_back(CheckResult{"logconcavity", m, static_cast<int>(i), ">= 0",
                                   to_string(margin), margin >= 0, ""});
      }
    } else if (check == "unimodality") {
      const bool ok = check_unimodality(m);
      rows.push_back(CheckResult{"unimodality", m, -1, "unimodal",
                                 ok ? "unimodal" : "not unimodal", ok, ""});
    } else if (check == "a1") {
      const auto [lhs, rhs] = identity_a1(m);
      const Rational expected = p_eval_single(m, Rational(1));
      CheckResult row{"a1", m, -1, to_string(expected), to_string(lhs),
                      lhs == rhs && lhs == expected, ""};
      if (!row.pass) row.witness = "right side " + to_string(rhs);
      rows.push_back(std::move(row));
    } else if (check == "section4") {
      if (m < 2) continue;
      const auto D = big_d_from_d(d_coeffs(m));
      for (unsigned i = 1; i + 1 <= m; ++i) {
        const auto [lhs, rhs] = big_d_product_inequality(D, i);
        rows.push_back(CheckResult{"section4", m, static_cast<int>(i), "< " + to_string(rhs),
                                   to_string(lhs), lhs < rhs, ""});
      }
    }
  }
}

int emit_rows(const std::vector<CheckResult>& rows, const std::string& format) {
  if (format == "tsv") {
    std::string out;
    for (const auto& row : rows) out += check_to_tsv_row(row);
    std::fputs(out.c_str(), stdout);
  } else {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& row : rows) doc.push_back(check_to_json(row));
    std::fputs(doc.dump().c_str(), stdout);
    std::fputc('\n', stdout);
  }
  return all_pass(rows) ? 0 : 1;
}

int cmd_verify(const MRange& range, const std::string& checks_csv, const std::string& format) {
  const auto checks = split_csv(checks_csv);
  if (checks.empty()) throw std::invalid_argument("--checks selects nothing");
  for (const auto& check : checks) {
    if (std::find(kAllChecks.begin(), kAllChecks.end(), check) == kAllChecks.end())
      throw std::invalid_argument("unknown check: " + check);
  }
  std::vector<CheckResult> rows;
  for (unsigned m = range.lo; m <= range.hi; ++m) append_verify_checks(m, checks, rows);
  return emit_rows(rows, format);
}

// ---- oracle ---------------------------------------------------------------

unsigned oracle_bound() {
  const char* env = std::getenv("BMKIT_ORACLE_MAX_M");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationMaxM;
  const std::string text(env);
  for (char c : text)
    if (c < '0' || c > '9')
      throw std::invalid_argument("BMKIT_ORACLE_MAX_M is not a nonnegative integer: " + text);
  return static_cast<unsigned>(std::stoul(text));
}

int cmd_oracle(const MRange& range, const std::string& format) {
  const unsigned bound = oracle_bound();
  if (range.lo < 1)
    throw std::invalid_argument("oracle needs m >= 1");
  if (range.hi > bound)
    throw std::invalid_argument("m=" + std::to_string(range.hi) +
                                " exceeds the enumeration bound (" + std::to_string(bound) +
                                "); set BMKIT_ORACLE_MAX_M to raise it");
  if (format == "tsv") {
    std::string out;
    bool ok = true;
    for (unsigned m = range.lo; m <= range.hi; ++m) {
      const auto report = verify_model(m, bound);
      ok = ok && report.all_pass();
      out += report_to_tsv(report);
    }
    std::fputs(out.c_str(), stdout);
    return ok ? 0 : 1;
  }
  auto docs = nlohmann::ordered_json::array();
  bool ok = true;
  for (unsigned m = range.lo; m <= range.hi; ++m) {
    const auto report = verify_model(m, bound);
    ok = ok && report.all_pass();
    docs.push_back(report_to_json(report));
  }
  const std::string out = range.lo == range.hi ? docs.front().dump() : docs.dump();
  std::fputs(out.c_str(), stdout);
  std::fputc('\n', stdout);
  return ok ? 0 : 1;
}

// ---- integral -------------------------------------------------------------

int cmd_integral(const MRange& range, const std::string& a_text, double tol,
                 const std::string& format) {
  const Rational a = parse_decimal_or_rational(a_text);
  bool ok = true;
  std::string tsv;
  auto docs = nlohmann::ordered_json::array();
  for (unsigned m = range.lo; m <= range.hi; ++m) {
    const IntegralCheck check = integral_check(m, a, tol);
    const bool row_ok = check.converged && check.abs_err <= tol;
    ok = ok && row_ok;
    if (format == "tsv") {
      tsv += std::to_string(m) + '\t' + to_string(a) + '\t' + sig12(check.numeric) + '\t' +
             sig12(check.closed_form) + '\t' + sig12(check.abs_err) + '\t' +
             (row_ok ? "pass" : "fail") + '\n';
    } else {
      nlohmann::ordered_json j;
      j["m"] = m;
      j["a"] = to_string(a);
      j["numeric"] = sig12(check.numeric);
      j["closed_form"] = sig12(check.closed_form);
      j["abs_err"] = sig12(check.abs_err);
      j["pass"] = row_ok;
      docs.push_back(std::move(j));
    }
  }
  if (format == "tsv") {
    std::fputs(tsv.c_str(), stdout);
  } else {
    const std::string out = range.lo == range.hi ? docs.front().dump() : docs.dump();
    std::fputs(out.c_str(), stdout);
    std::fputc('\n', stdout);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boros-Moll coefficient toolkit"};
  app.require_subcommand(1);

  std::string m_text;
  std::string kind = "d";
  std::string format = "tsv";
  std::string checks_csv = "formulas,recurrence,logconcavity,unimodality,a1,section4";
  std::string a_text;
  double tol = 1e-8;

  auto* table = app.add_subcommand("table", "Print d- or D-coefficient rows");
  table->add_option("--m", m_text, "m or lo..hi")->required();
  table->add_option("--kind", kind, "d or D")->check(CLI::IsMember({"d", "D"}));
  table->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  auto* verify = app.add_subcommand("verify", "Run verification sweeps over an m-range");
  verify->add_option("--m", m_text, "m or lo..hi")->required();
  verify->add_option("--checks", checks_csv, "comma-separated subset of "
                     "formulas,recurrence,logconcavity,unimodality,a1,section4");
  verify->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  auto* oracle = app.add_subcommand("oracle", "Exhaustive enumeration cross-check");
  oracle->add_option("--m", m_text, "m or lo..hi")->required();
  oracle->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  auto* integral = app.add_subcommand("integral", "Quadrature against the closed form");
  integral->add_option("--m", m_text, "m or lo..hi")->required();
  integral->add_option("--a", a_text, "parameter a > -1, decimal or p/q")->required();
  integral->add_option("--tol", tol, "absolute tolerance");
  integral->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const MRange range = parse_m_range(m_text);
    if (table->parsed()) return cmd_table(range, kind, format);
    if (verify->parsed()) return cmd_verify(range, checks_csv, format);
    if (oracle->parsed()) return cmd_oracle(range, format);
    return cmd_integral(range, a_text, tol, format);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
