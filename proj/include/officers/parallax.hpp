#pragma once

// Line sets of a 4-class net, their parallaxes (per-class line counts) and
// point profiles, the weight formula for the binary sum of a line set, and
// the enumeration and exclusion of parallaxes a zero sum could have.
//
// Class indices are zero-based here: "switch classes {2, 3}" acts on the
// third and fourth classes.

#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "officers/certificate.hpp"
#include "officers/designs.hpp"
#include "officers/gf2.hpp"

namespace officers {

inline constexpr int kOfficersOrder = 6;

struct Parallax {
  std::array<int, 4> counts{};

  int l() const noexcept;
  // Sum over i < j of counts[i] * counts[j].
  int m() const noexcept;

  std::string to_string() const;
  // "2226" -> {2, 2, 2, 6}. Throws InputError on malformed text.
  static Parallax parse(std::string_view digits);

  friend auto operator<=>(const Parallax&, const Parallax&) = default;
};

struct PointProfile {
  int p1 = 0;
  int p2 = 0;
  int p3 = 0;
  int p4 = 0;
  friend bool operator==(const PointProfile&, const PointProfile&) = default;
};

class LineSet {
 public:
  // Throws InputError for ids outside the net.
  LineSet(const Net& net, std::vector<LineId> members);

  const Net& net() const noexcept { return *net_; }
  const std::vector<LineId>& members() const noexcept { return members_; }

  Parallax parallax() const;
  // c(L): binary sum of the members' characteristic vectors.
  GF2Vector sum() const;

 private:
  const Net* net_;
  std::vector<LineId> members_;  // sorted, distinct
};

// Counts of points on exactly 1..4 lines of the set. Throws
// UnsupportedError unless the net has exactly four classes.
PointProfile profile(const LineSet& lines);

// wt(c(L)) = base + 4 p3 + 8 p4 with base = n l - 2 m.
struct WeightFormula {
  int base = 0;
  int p3_coefficient = 4;
  int p4_coefficient = 8;

  int evaluate(int p3, int p4) const noexcept { return base + p3_coefficient * p3 + p4_coefficient * p4; }
};

WeightFormula weight_decomposition(const Parallax& pi, int n = kOfficersOrder);

enum class SwitchParity { Even, AllowOdd };

// counts[i] -> n - counts[i] for i in `classes`. An odd number of classes
// changes c(L) and must be requested with SwitchParity::AllowOdd.
Parallax switch_classes(const Parallax& pi, std::span<const int> classes,
                        SwitchParity parity = SwitchParity::Even, int n = kOfficersOrder);

// Replaces the members in each listed class by the class's other lines.
LineSet switch_lines(const LineSet& lines, std::span<const int> classes);

// The normalization a zero-sum parallax can be brought to by even switching
// and renumbering: 3 >= l1 >= l2 >= l3, and l3 >= l4 as well when l1 = 3.
bool is_normalized(const Parallax& pi);

// With p1 = p3 = 0 (order 6): 2 p2 = 9l - m and 4 p4 = m - 3l must have
// nonnegative integer solutions.
struct ZeroWeightSolution {
  int p2 = 0;
  int p4 = 0;
};
std::optional<ZeroWeightSolution> zero_weight_solution(const Parallax& pi);

enum class EnumerationOrder { FilterThenSolve, SolveThenFilter };

// Normalized nonempty parallaxes over the box {0..6}^4 admitting a zero
// weight; sorted.
std::vector<Parallax> enumerate_zero_parallaxes(
    EnumerationOrder order = EnumerationOrder::FilterThenSolve);

// All parallaxes reachable by even switching and permuting the classes.
std::set<Parallax> switching_orbit(const Parallax& pi);

struct NormalizationAudit {
  int box_size = 0;
  bool every_orbit_normalizable = false;
  int orbit_closed = 0;  // tuples whose whole orbit admits zero weight
  std::set<Parallax> orbit_closed_normal_forms;
  bool candidates_cover_orbit_closed = false;
};

// Soundness of the normalization: every orbit has a normalized member,
// and every tuple whose whole orbit passes the zero-weight test meets the
// candidate list or the orbit of 0000.
NormalizationAudit audit_normalization();

struct ArithmeticFault {
  int weight_base_offset = 0;  // test hook: perturbs the weight formula
};

// Replayable exclusion of 2226, 3330 and 3332. Throws UnsupportedError for
// 2222 (ruled out by the Graeco-Latin completion argument instead) and for
// any other parallax.
Certificate exclusion_certificate(const Parallax& pi, const ArithmeticFault& fault = {});

}  // namespace officers
