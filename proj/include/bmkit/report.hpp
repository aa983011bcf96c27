#ifndef BMKIT_REPORT_HPP
#define BMKIT_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace bmkit {

// One verification outcome. expected/observed hold exact "p/q" strings (or a
// short description for structural checks); witness is filled on failure only.
struct CheckResult {
  std::string check;
  unsigned m = 0;
  int i = -1;  // -1 when the check is not indexed by i
  std::string expected;
  std::string observed;
  bool pass = false;
  std::string witness;
};

nlohmann::ordered_json check_to_json(const CheckResult& r);

// check, m, i ("-" when unindexed), expected, observed, pass, witness
std::string check_to_tsv_row(const CheckResult& r);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace bmkit

#endif  // BMKIT_REPORT_HPP
