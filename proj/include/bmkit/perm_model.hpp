#ifndef BMKIT_PERM_MODEL_HPP
#define BMKIT_PERM_MODEL_HPP

#include "bmkit/rational.hpp"
#include "bmkit/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bmkit {

// Exhaustive enumeration is kept to small m by default; lift with care, the
// state space grows like (2m)! 4^m.
inline constexpr unsigned kDefaultEnumerationMaxM = 4;

// (A, B, C) splitting [2m]: A holds the white line elements, B the black
// line elements, C the elements arranged into cycles. Bit e-1 stands for
// element e. Parts may be empty; together they cover [2m] exactly.
struct Composition {
  unsigned m = 0;
  std::uint64_t white_mask = 0;
  std::uint64_t black_mask = 0;
  std::uint64_t cycle_mask = 0;

  friend bool operator==(const Composition&, const Composition&) = default;
};

enum class MarkKind : std::uint8_t { None, Line, Cycle };

// Which family a structure belongs to, by where its single mark sits:
//   A: mark on a white line element      B: mark on a black line element
//   C: mark on a cycle element           D: no mark
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

struct FamilyTag {
  Family family = Family::D;
  unsigned m = 0;
  int i = 0;  // black count minus m

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// A line permutation of A ∪ B (colors derived from the composition) together
// with a cycle decomposition of C, plus at most one mark.
//
// Canonical form: unmarked cycles start at their minimum and are sorted by
// minimum; a marked cycle starts at the marked element and sits first.
struct ColoredPermutation {
  Composition comp;
  std::vector<int> line;
  std::vector<std::vector<int>> cycles;
  MarkKind mark_kind = MarkKind::None;
  int mark = -1;  // line index for MarkKind::Line, element value for MarkKind::Cycle

  bool is_white(int e) const { return comp.white_mask >> (e - 1) & 1; }
  bool is_black(int e) const { return comp.black_mask >> (e - 1) & 1; }

  // |A| + number of cycles; the weight is (1/2)^exponent
  unsigned weight_exponent() const;

  void canonicalize();

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
};

Rational weight(const ColoredPermutation& p);

// Full structural validation: partition, line/cycle contents, canonical
// form, mark consistency.
bool is_well_formed(const ColoredPermutation& p);

// Family membership from the mark and the black count; nullopt when the
// black count is below m (no family index).
std::optional<FamilyTag> classify(const ColoredPermutation& p);

// One-line text form: black "*", underline "_", cycles parenthesized, e.g.
// "*2,*12,8,*11,*5,_*9,*7,1,*4,*3|(6,10)".
std::string to_string(const ColoredPermutation& p);

using StructureVisitor = std::function<void(const ColoredPermutation&)>;

// Visits every member of the family exactly once, in a fixed deterministic
// order. Throws std::domain_error when m is 0 or exceeds max_m.
void enumerate_family(unsigned m, unsigned i, Family family, const StructureVisitor& visit,
                      unsigned max_m = kDefaultEnumerationMaxM);

std::vector<ColoredPermutation> collect_family(unsigned m, unsigned i, Family family,
                                               unsigned max_m = kDefaultEnumerationMaxM);

struct FamilySum {
  std::uint64_t count = 0;
  Rational weight;
};

// Count and exact total weight of one family.
FamilySum family_sum(unsigned m, unsigned i, Family family,
                     unsigned max_m = kDefaultEnumerationMaxM);

Rational family_weight(unsigned m, unsigned i, Family family,
                       unsigned max_m = kDefaultEnumerationMaxM);

// Flips the marked black line element to white (B_{i+1} -> A_i); halves the
// weight. recolor_inverse is the exact inverse. Throws std::invalid_argument
// when the mark is not on an element of the expected color.
ColoredPermutation recolor(const ColoredPermutation& p);
ColoredPermutation recolor_inverse(const ColoredPermutation& p);

// Images of the cycle-unfolding map: the marked cycle (e_1 e_2 ... e_k)
// moves onto the line one prefix at a time, e_1 turning black, the rest
// white. Images 1..k-1 keep a cycle mark, image k is unmarked; weights are
// (1/2)^{j-1} and (1/2)^{k-2} times the preimage weight.
struct DeltaImage {
  std::vector<ColoredPermutation> images;
};

DeltaImage delta(const ColoredPermutation& p);

// Rebuilds the preimage from the last black line element and the white
// suffix behind it. Throws std::invalid_argument on a line mark or when the
// line has no black element.
ColoredPermutation delta_inverse(const ColoredPermutation& q);

struct ModelReport {
  unsigned m = 0;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Exhaustively verifies, for every index i:
//   (a) w(D_i) matches the coefficient row (and the member count its formula),
//   (b) w(B_i) = (m+i) D_i and w(A_i) + w(C_i) = (m-i) D_i,
//   (c) recolor is a weight-halving bijection B_{i+1} -> A_i,
//   (d) delta images partition C_i ∪ D_i with the stated weight factors,
//   (e) w(A_i) < w(B_i) strictly on the interior.
ModelReport verify_model(unsigned m, unsigned max_m = kDefaultEnumerationMaxM);

nlohmann::ordered_json report_to_json(const ModelReport& report);
std::string report_to_tsv(const ModelReport& report);

}  // namespace bmkit

#endif  // BMKIT_PERM_MODEL_HPP
