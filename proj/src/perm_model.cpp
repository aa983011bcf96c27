#include "bmkit/perm_model.hpp"

#include "bmkit/combinatorics.hpp"
#include "bmkit/tables.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace bmkit {

namespace {

std::uint64_t bit_of(int e) { return std::uint64_t(1) << (e - 1); }

// advances a k-subset of {0..n-1} in lexicographic order
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int t = k - 1; t >= 0; --t) {
    if (idx[t] < n - (k - t)) {
      ++idx[t];
      for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
      return true;
    }
  }
  return false;
}

// cycle decomposition of the one-line map dom[t] -> img[t]; scanning dom in
// ascending order yields the canonical form directly (min leads each cycle,
// cycles ordered by minimum)
std::vector<std::vector<int>> one_line_to_cycles(const std::vector<int>& dom,
                                                 const std::vector<int>& img,
                                                 std::vector<int>& pos_scratch) {
  std::vector<std::vector<int>> cycles;
  const int k = static_cast<int>(dom.size());
  for (int t = 0; t < k; ++t) pos_scratch[dom[t]] = t;
  std::vector<bool> used(k, false);
  for (int s = 0; s < k; ++s) {
    if (used[s]) continue;
    std::vector<int> cyc;
    int t = s;
    while (!used[t]) {
      used[t] = true;
      cyc.push_back(dom[t]);
      t = pos_scratch[img[t]];
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

// Emits every unmarked structure with |B| = m+i once, in the fixed order:
// B-subsets, then A-subsets of the complement by size, then line
// permutations, then cycle permutations. The visitor may change mark fields
// but must leave everything else alone.
template <typename Visit>
void for_each_unmarked(unsigned m, unsigned i, Visit&& visit) {
  const int n = static_cast<int>(2 * m);
  const int blacks = static_cast<int>(m + i);
  if (blacks > n) return;
  const int rest_size = n - blacks;
  const std::uint64_t full = (std::uint64_t(1) << n) - 1;

  std::vector<int> pos_scratch(n + 1, 0);
  ColoredPermutation p;
  p.comp.m = m;

  std::vector<int> bidx(blacks);
  std::iota(bidx.begin(), bidx.end(), 0);
  bool more_b = true;
  while (more_b) {
    std::uint64_t black = 0;
    for (int t : bidx) black |= bit_of(t + 1);
    std::vector<int> rest;
    rest.reserve(rest_size);
    for (int e = 1; e <= n; ++e)
      if (!(black >> (e - 1) & 1)) rest.push_back(e);

    for (int j = 0; j <= rest_size; ++j) {
      std::vector<int> aidx(j);
      std::iota(aidx.begin(), aidx.end(), 0);
      bool more_a = true;
      while (more_a) {
        std::uint64_t white = 0;
        for (int t : aidx) white |= bit_of(rest[t]);
        p.comp.black_mask = black;
        p.comp.white_mask = white;
        p.comp.cycle_mask = full & ~(black | white);

        std::vector<int> line0, cyc_dom;
        line0.reserve(blacks + j);
        cyc_dom.reserve(rest_size - j);
        for (int e = 1; e <= n; ++e) {
          if ((black | white) >> (e - 1) & 1)
            line0.push_back(e);
          else
            cyc_dom.push_back(e);
        }

        p.line = std::move(line0);
        do {
          std::vector<int> img = cyc_dom;
          do {
            p.cycles = one_line_to_cycles(cyc_dom, img, pos_scratch);
            p.mark_kind = MarkKind::None;
            p.mark = -1;
            visit(p);
          } while (std::next_permutation(img.begin(), img.end()));
        } while (std::next_permutation(p.line.begin(), p.line.end()));

        more_a = next_combination(aidx, rest_size);
      }
    }
    more_b = next_combination(bidx, n);
  }
}

ColoredPermutation with_cycle_mark(const ColoredPermutation& base, size_t cycle_index,
                                   size_t offset) {
  ColoredPermutation marked = base;
  std::vector<int> cyc = marked.cycles[cycle_index];
  std::rotate(cyc.begin(), cyc.begin() + offset, cyc.end());
  marked.cycles.erase(marked.cycles.begin() + cycle_index);
  marked.mark_kind = MarkKind::Cycle;
  marked.mark = cyc.front();
  marked.cycles.insert(marked.cycles.begin(), std::move(cyc));
  return marked;
}

}  // namespace

unsigned ColoredPermutation::weight_exponent() const {
  return static_cast<unsigned>(std::popcount(comp.white_mask) + cycles.size());
}

void ColoredPermutation::canonicalize() {
  std::vector<int> marked_cycle;
  if (mark_kind == MarkKind::Cycle) {
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
      auto it = std::find(cycles[ci].begin(), cycles[ci].end(), mark);
      if (it == cycles[ci].end()) continue;
      marked_cycle = cycles[ci];
      std::rotate(marked_cycle.begin(), marked_cycle.begin() + (it - cycles[ci].begin()),
                  marked_cycle.end());
      cycles.erase(cycles.begin() + ci);
      break;
    }
  }
  for (auto& cyc : cycles) {
    auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn, cyc.end());
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  if (!marked_cycle.empty()) cycles.insert(cycles.begin(), std::move(marked_cycle));
}

Rational weight(const ColoredPermutation& p) {
  return make_rational(1, pow2(p.weight_exponent()));
}

bool is_well_formed(const ColoredPermutation& p) {
  const unsigned m = p.comp.m;
  if (m == 0 || m > 32) return false;
  const int n = static_cast<int>(2 * m);
  const std::uint64_t full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
  const std::uint64_t a = p.comp.white_mask, b = p.comp.black_mask, c = p.comp.cycle_mask;
  if ((a & b) || (a & c) || (b & c)) return false;
  if ((a | b | c) != full) return false;

  std::uint64_t seen = 0;
  for (int e : p.line) {
    if (e < 1 || e > n) return false;
    const std::uint64_t bit = bit_of(e);
    if (!((a | b) & bit) || (seen & bit)) return false;
    seen |= bit;
  }
  if (seen != (a | b)) return false;

  seen = 0;
  for (const auto& cyc : p.cycles) {
    if (cyc.empty()) return false;
    for (int e : cyc) {
      if (e < 1 || e > n) return false;
      const std::uint64_t bit = bit_of(e);
      if (!(c & bit) || (seen & bit)) return false;
      seen |= bit;
    }
  }
  if (seen != c) return false;

  switch (p.mark_kind) {
    case MarkKind::None:
      if (p.mark != -1) return false;
      break;
    case MarkKind::Line:
      if (p.mark < 0 || p.mark >= static_cast<int>(p.line.size())) return false;
      break;
    case MarkKind::Cycle:
      if (p.mark < 1 || p.mark > n || !(c & bit_of(p.mark))) return false;
      break;
  }

  ColoredPermutation canonical = p;
  canonical.canonicalize();
  return canonical == p;
}

std::optional<FamilyTag> classify(const ColoredPermutation& p) {
  const int i = std::popcount(p.comp.black_mask) - static_cast<int>(p.comp.m);
  if (i < 0 || i > static_cast<int>(p.comp.m)) return std::nullopt;
  Family family;
  switch (p.mark_kind) {
    case MarkKind::None:
      family = Family::D;
      break;
    case MarkKind::Cycle:
      family = Family::C;
      break;
    case MarkKind::Line:
      if (p.mark < 0 || p.mark >= static_cast<int>(p.line.size())) return std::nullopt;
      family = p.is_white(p.line[p.mark]) ? Family::A : Family::B;
      break;
    default:
      return std::nullopt;
  }
  return FamilyTag{family, p.comp.m, i};
}

std::string to_string(const ColoredPermutation& p) {
  std::string out;
  for (size_t pos = 0; pos < p.line.size(); ++pos) {
    if (pos) out += ',';
    if (p.mark_kind == MarkKind::Line && static_cast<int>(pos) == p.mark) out += '_';
    if (p.is_black(p.line[pos])) out += '*';
    out += std::to_string(p.line[pos]);
  }
  out += '|';
  for (const auto& cyc : p.cycles) {
    out += '(';
    for (size_t t = 0; t < cyc.size(); ++t) {
      if (t) out += ',';
      if (p.mark_kind == MarkKind::Cycle && cyc[t] == p.mark) out += '_';
      out += std::to_string(cyc[t]);
    }
    out += ')';
  }
  return out;
}

void enumerate_family(unsigned m, unsigned i, Family family, const StructureVisitor& visit,
                      unsigned max_m) {
  if (m == 0) throw std::domain_error("enumeration needs m >= 1");
  if (m > max_m)
    throw std::domain_error("m exceeds the enumeration bound (" + std::to_string(max_m) + ")");
  if (m > 31) throw std::domain_error("m exceeds the 64-bit element capacity");
  if (i > m) return;  // |B| = m+i would exceed 2m

  switch (family) {
    case Family::D:
      for_each_unmarked(m, i, [&](ColoredPermutation& p) { visit(p); });
      break;
    case Family::A:
    case Family::B: {
      const bool want_white = family == Family::A;
      for_each_unmarked(m, i, [&](ColoredPermutation& p) {
        for (size_t pos = 0; pos < p.line.size(); ++pos) {
          if (p.is_white(p.line[pos]) != want_white) continue;
          p.mark_kind = MarkKind::Line;
          p.mark = static_cast<int>(pos);
          visit(p);
          p.mark_kind = MarkKind::None;
          p.mark = -1;
        }
      });
      break;
    }
    case Family::C:
      for_each_unmarked(m, i, [&](ColoredPermutation& p) {
        for (size_t ci = 0; ci < p.cycles.size(); ++ci)
          for (size_t t = 0; t < p.cycles[ci].size(); ++t) {
            const ColoredPermutation marked = with_cycle_mark(p, ci, t);
            visit(marked);
          }
      });
      break;
  }
}

std::vector<ColoredPermutation> collect_family(unsigned m, unsigned i, Family family,
                                               unsigned max_m) {
  std::vector<ColoredPermutation> members;
  enumerate_family(
      m, i, family, [&](const ColoredPermutation& p) { members.push_back(p); }, max_m);
  return members;
}

FamilySum family_sum(unsigned m, unsigned i, Family family, unsigned max_m) {
  std::vector<std::uint64_t> counts(2 * m + 2, 0);
  enumerate_family(
      m, i, family, [&](const ColoredPermutation& p) { ++counts[p.weight_exponent()]; }, max_m);
  FamilySum sum;
  sum.weight = Rational(0);
  for (size_t e = 0; e < counts.size(); ++e) {
    if (!counts[e]) continue;
    sum.count += counts[e];
    sum.weight += Rational(BigInt(counts[e])) * half_pow(static_cast<int>(e));
  }
  return sum;
}

Rational family_weight(unsigned m, unsigned i, Family family, unsigned max_m) {
  return family_sum(m, i, family, max_m).weight;
}

ColoredPermutation recolor(const ColoredPermutation& p) {
  if (p.mark_kind != MarkKind::Line || p.mark < 0 ||
      p.mark >= static_cast<int>(p.line.size()) || !p.is_black(p.line[p.mark]))
    throw std::invalid_argument("recolor expects the mark on a black line element");
  ColoredPermutation q = p;
  const std::uint64_t bit = bit_of(p.line[p.mark]);
  q.comp.black_mask &= ~bit;
  q.comp.white_mask |= bit;
  return q;
}

ColoredPermutation recolor_inverse(const ColoredPermutation& p) {
  if (p.mark_kind != MarkKind::Line || p.mark < 0 ||
      p.mark >= static_cast<int>(p.line.size()) || !p.is_white(p.line[p.mark]))
    throw std::invalid_argument("recolor_inverse expects the mark on a white line element");
  ColoredPermutation q = p;
  const std::uint64_t bit = bit_of(p.line[p.mark]);
  q.comp.white_mask &= ~bit;
  q.comp.black_mask |= bit;
  return q;
}

DeltaImage delta(const ColoredPermutation& p) {
  if (p.mark_kind != MarkKind::Cycle) throw std::invalid_argument("delta expects a cycle mark");
  ColoredPermutation src = p;
  if (src.cycles.empty() || src.cycles.front().front() != src.mark) src.canonicalize();
  if (src.cycles.empty() || src.cycles.front().front() != src.mark)
    throw std::invalid_argument("mark is not a cycle element");

  const std::vector<int> head = src.cycles.front();
  const int k = static_cast<int>(head.size());
  ColoredPermutation base = std::move(src);
  base.cycles.erase(base.cycles.begin());
  base.mark_kind = MarkKind::None;
  base.mark = -1;

  DeltaImage out;
  out.images.reserve(k);
  for (int j = 1; j <= k; ++j) {
    ColoredPermutation img = base;
    img.line.push_back(head[0]);
    img.comp.black_mask |= bit_of(head[0]);
    img.comp.cycle_mask &= ~bit_of(head[0]);
    for (int t = 1; t < j; ++t) {
      img.line.push_back(head[t]);
      img.comp.white_mask |= bit_of(head[t]);
      img.comp.cycle_mask &= ~bit_of(head[t]);
    }
    if (j < k) {
      img.cycles.insert(img.cycles.begin(), std::vector<int>(head.begin() + j, head.end()));
      img.mark_kind = MarkKind::Cycle;
      img.mark = head[j];
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

ColoredPermutation delta_inverse(const ColoredPermutation& q) {
  if (q.mark_kind == MarkKind::Line)
    throw std::invalid_argument("delta_inverse expects an unmarked or cycle-marked structure");
  int black_pos = -1;
  for (int t = static_cast<int>(q.line.size()) - 1; t >= 0; --t) {
    if (q.is_black(q.line[t])) {
      black_pos = t;
      break;
    }
  }
  if (black_pos < 0) throw std::invalid_argument("no black element in the line");

  ColoredPermutation p = q;
  std::vector<int> moved(p.line.begin() + black_pos, p.line.end());
  const int black = moved.front();
  p.line.erase(p.line.begin() + black_pos, p.line.end());
  p.comp.black_mask &= ~bit_of(black);
  p.comp.cycle_mask |= bit_of(black);
  for (size_t t = 1; t < moved.size(); ++t) {
    p.comp.white_mask &= ~bit_of(moved[t]);
    p.comp.cycle_mask |= bit_of(moved[t]);
  }

  if (q.mark_kind == MarkKind::None) {
    p.cycles.insert(p.cycles.begin(), std::move(moved));
  } else {
    if (p.cycles.empty() || p.cycles.front().front() != p.mark) {
      p.canonicalize();
      if (p.cycles.empty() || p.cycles.front().front() != p.mark)
        throw std::invalid_argument("mark is not a cycle element");
    }
    p.cycles.front().insert(p.cycles.front().begin(), moved.begin(), moved.end());
  }
  p.mark_kind = MarkKind::Cycle;
  p.mark = black;
  return p;
}

bool ModelReport::all_pass() const { return bmkit::all_pass(checks); }

namespace {

// expected count of unmarked structures with |B| = m+i:
// C(2m, m-i) sum_j C(m-i, j) (m+i+j)! (m-i-j)!
BigInt unmarked_count_formula(unsigned m, unsigned i) {
  BigInt sum = 0;
  for (unsigned j = 0; j + i <= m; ++j)
    sum += binomial(m - i, j) * factorial(m + i + j) * factorial(m - i - j);
  return binomial(2 * m, m - i) * sum;
}

CheckResult make_check(std::string name, unsigned m, int i, std::string expected,
                       std::string observed, bool pass, std::string witness = "") {
  return CheckResult{std::move(name), m,    i,
                     std::move(expected),   std::move(observed),
                     pass,                  std::move(witness)};
}

}  // namespace

ModelReport verify_model(unsigned m, unsigned max_m) {
  ModelReport report;
  report.m = m;
  auto& checks = report.checks;

  const CoefficientTable D = big_d_from_d(d_coeffs(m));

  std::vector<FamilySum> sum_a(m + 1), sum_b(m + 1), sum_c(m + 1), sum_d(m + 1);
  for (unsigned i = 0; i <= m; ++i) {
    sum_a[i] = family_sum(m, i, Family::A, max_m);
    sum_b[i] = family_sum(m, i, Family::B, max_m);
    sum_c[i] = family_sum(m, i, Family::C, max_m);
    sum_d[i] = family_sum(m, i, Family::D, max_m);
  }

  for (unsigned i = 0; i <= m; ++i) {
    const Rational& di = D.values[i];
    checks.push_back(make_check("D-weight", m, static_cast<int>(i), to_string(di),
                                to_string(sum_d[i].weight), sum_d[i].weight == di));
    const BigInt expected_count = unmarked_count_formula(m, i);
    checks.push_back(make_check("D-count", m, static_cast<int>(i), expected_count.str(),
                                std::to_string(sum_d[i].count),
                                BigInt(sum_d[i].count) == expected_count));
    const Rational black_side = Rational(BigInt(m + i)) * di;
    checks.push_back(make_check("B-weight", m, static_cast<int>(i), to_string(black_side),
                                to_string(sum_b[i].weight), sum_b[i].weight == black_side));
    const Rational other_side = Rational(BigInt(m - i)) * di;
    const Rational ac = sum_a[i].weight + sum_c[i].weight;
    checks.push_back(make_check("AC-weight", m, static_cast<int>(i), to_string(other_side),
                                to_string(ac), ac == other_side));
  }

  // (c) recolor: B_{i+1} -> A_i, element by element
  for (unsigned i = 0; i + 1 <= m; ++i) {
    std::string witness;
    enumerate_family(
        m, i + 1, Family::B,
        [&](const ColoredPermutation& p) {
          if (!witness.empty()) return;
          const ColoredPermutation q = recolor(p);
          const auto tag = classify(q);
          if (!tag || tag->family != Family::A || tag->i != static_cast<int>(i))
            witness = "image misclassified: " + to_string(p);
          else if (q.weight_exponent() != p.weight_exponent() + 1)
            witness = "weight not halved: " + to_string(p);
          else if (recolor_inverse(q) != p)
            witness = "round-trip failed: " + to_string(p);
        },
        max_m);
    const bool counts_match = sum_b[i + 1].count == sum_a[i].count;
    const bool halves = sum_b[i + 1].weight == Rational(2) * sum_a[i].weight;
    if (!counts_match && witness.empty()) witness = "family sizes differ";
    checks.push_back(make_check("recolor-bijection", m, static_cast<int>(i),
                                to_string(sum_b[i + 1].weight / 2), to_string(sum_a[i].weight),
                                witness.empty() && counts_match && halves, witness));
  }

  // (d) delta: C_{i-1} -> C_i ∪ D_i
  for (unsigned i = 1; i <= m; ++i) {
    std::string witness;
    std::uint64_t image_count = 0;
    enumerate_family(
        m, i - 1, Family::C,
        [&](const ColoredPermutation& p) {
          if (!witness.empty()) return;
          const DeltaImage image = delta(p);
          const int k = static_cast<int>(image.images.size());
          const Rational wp = weight(p);
          Rational total(0);
          for (int j = 1; j <= k; ++j) {
            const ColoredPermutation& img = image.images[j - 1];
            const auto tag = classify(img);
            const Family want = j < k ? Family::C : Family::D;
            if (!tag || tag->family != want || tag->i != static_cast<int>(i)) {
              witness = "image misclassified: " + to_string(img);
              return;
            }
            if (!is_well_formed(img)) {
              witness = "image not canonical: " + to_string(img);
              return;
            }
            const Rational expected = wp * half_pow(j < k ? j - 1 : k - 2);
            if (weight(img) != expected) {
              witness = "wrong weight factor: " + to_string(img);
              return;
            }
            if (delta_inverse(img) != p) {
              witness = "inverse mismatch: " + to_string(img);
              return;
            }
            total += weight(img);
          }
          if (total != Rational(2) * wp) {
            witness = "image weights do not double: " + to_string(p);
            return;
          }
          image_count += static_cast<std::uint64_t>(k);
        },
        max_m);
    for (Family fam : {Family::C, Family::D}) {
      enumerate_family(
          m, i, fam,
          [&](const ColoredPermutation& q) {
            if (!witness.empty()) return;
            const ColoredPermutation pre = delta_inverse(q);
            const auto tag = classify(pre);
            if (!tag || tag->family != Family::C || tag->i != static_cast<int>(i) - 1) {
              witness = "preimage misclassified: " + to_string(q);
              return;
            }
            const DeltaImage image = delta(pre);
            if (std::find(image.images.begin(), image.images.end(), q) == image.images.end())
              witness = "not reproduced by its preimage: " + to_string(q);
          },
          max_m);
    }
    const std::uint64_t target_count = sum_c[i].count + sum_d[i].count;
    checks.push_back(make_check("delta-partition", m, static_cast<int>(i),
                                std::to_string(target_count), std::to_string(image_count),
                                witness.empty() && image_count == target_count, witness));
    const Rational doubled = Rational(2) * sum_c[i - 1].weight;
    const Rational joined = sum_c[i].weight + sum_d[i].weight;
    checks.push_back(make_check("delta-weight", m, static_cast<int>(i), to_string(doubled),
                                to_string(joined), doubled == joined));
  }

  // (e) strict interior inequality
  for (unsigned i = 1; i + 1 <= m; ++i)
    checks.push_back(make_check("A-less-B", m, static_cast<int>(i),
                                "< " + to_string(sum_b[i].weight), to_string(sum_a[i].weight),
                                sum_a[i].weight < sum_b[i].weight));

  return report;
}

nlohmann::ordered_json report_to_json(const ModelReport& report) {
  nlohmann::ordered_json j;
  j["m"] = report.m;
  j["pass"] = report.all_pass();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) rows.push_back(check_to_json(c));
  j["checks"] = std::move(rows);
  return j;
}

std::string report_to_tsv(const ModelReport& report) {
  std::string out;
  for (const auto& c : report.checks) out += check_to_tsv_row(c);
  return out;
}

}  // namespace bmkit
