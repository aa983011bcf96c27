#include "bmkit/report.hpp"

#include <sstream>

namespace bmkit {

nlohmann::ordered_json check_to_json(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["m"] = r.m;
  if (r.i >= 0) j["i"] = r.i;
  j["expected"] = r.expected;
  j["observed"] = r.observed;
  j["pass"] = r.pass;
  if (!r.pass) j["witness"] = r.witness;
  return j;
}

std::string check_to_tsv_row(const CheckResult& r) {
  std::ostringstream out;
  out << r.check << '\t' << r.m << '\t';
  if (r.i >= 0)
    out << r.i;
  else
    out << '-';
  out << '\t' << r.expected << '\t' << r.observed << '\t' << (r.pass ? "pass" : "fail");
  if (!r.pass) out << '\t' << r.witness;
  out << '\n';
  return out.str();
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace bmkit
