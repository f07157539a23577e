#pragma once

// Affine planes and the quadrant argument excluding order 6.
//
// AG(2, q) has points (x, y) over the q-element field, stored as y * q + x,
// and classes "y = m x + b" for each slope m followed by the verticals.
//
// The order-6 argument works on a 6 x 6 coordinate grid whose points are
// written "xy" with 1 <= x, y <= 6. A line that is not a grid line meets
// every column and row once, so it is a permutation y = sigma(x).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "officers/certificate.hpp"
#include "officers/designs.hpp"

namespace officers {

class FiniteField {
 public:
  // Supported q: 2, 3, 4, 5, 7, 8, 9. Throws UnsupportedError otherwise.
  explicit FiniteField(int q);

  int size() const noexcept { return q_; }
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }
  int neg(int a) const;
  int inv(int a) const;  // a != 0

 private:
  int q_;
  std::vector<int> add_, mul_;
};

class IncidencePlane {
 public:
  int order() const noexcept { return net_.order(); }
  const Net& net() const noexcept { return net_; }
  int point_count() const noexcept { return net_.point_count(); }

  // The line through two distinct points.
  LineId join(int p, int q) const;
  bool parallel(LineId a, LineId b) const { return a.cls == b.cls; }
  bool collinear(int p, int q, int r) const;
  // The common point of two non-parallel lines.
  int meet(LineId a, LineId b) const;

 private:
  friend IncidencePlane validate_plane(Net net);
  explicit IncidencePlane(Net net);

  Net net_;
  std::vector<LineId> join_;  // join_[p * N + q]
};

// A net with n + 1 classes; two distinct points then share exactly one
// line. Throws InputError if the class count is wrong and ValidationError
// ("plane.two_points") if some pair of points shares no line.
IncidencePlane validate_plane(Net net);

IncidencePlane ag2(int q);

// `vertices` in cyclic order. Throws InputError for repeated points, a
// collinear triple, or opposite sides that are not parallel.
bool diagonals_parallel(const IncidencePlane& plane, const std::array<int, 4>& vertices);

struct ParallelogramSurvey {
  std::uint64_t parallelograms = 0;  // vertex cycles up to rotation and reflection
  std::uint64_t vertex_sets = 0;     // distinct 4-point sets
  std::uint64_t diagonals_parallel = 0;
  std::optional<std::array<int, 4>> witness;  // first with meeting diagonals

  bool all_parallel() const noexcept { return parallelograms == diagonals_parallel; }
};

// Every parallelogram, each counted once.
ParallelogramSurvey survey_parallelograms(const IncidencePlane& plane);

struct GridPoint {
  int x = 1;
  int y = 1;

  std::string name() const;
  static GridPoint parse(std::string_view text);
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class Quadrant { LL, LR, UL, UR };

Quadrant quadrant(GridPoint p);
std::string to_string(Quadrant q);

// Named partial lines on the 6 x 6 grid.
struct GridConfig {
  std::map<std::string, std::set<GridPoint>> lines;

  // Adds a point; throws InputError if the line already has a point in the
  // same column or row.
  void place(const std::string& line, GridPoint p);
  // Name of the line holding p, if any.
  std::optional<std::string> owner(GridPoint p) const;
};

// R and D before renumbering: R = 11..66, D = 13,22,31,46,54,65.
GridConfig quadrant_config();
// R = 11..66, D = 12,21,34,43,56,65, with 13 on A and 14 on B.
GridConfig propagation_seed();

// Line R has LL count |{i <= 3 : s(i) <= 3}| and UR count
// |{i >= 4 : s(i) >= 4}|.
std::pair<int, int> ll_ur_counts(const std::array<int, 6>& sigma);  // sigma[x - 1] = y

Certificate ll_ur_balance_check();
Certificate parallel_distribution_check();
Certificate collinear_triple_check();
Certificate triangle_side_check();

struct Derivation {
  std::array<GridPoint, 4> parallelogram;  // xy, xy', x'y, x'y'
  std::string diagonal_line;
  std::string line;
  GridPoint from;
  GridPoint added;
};

// Applies the parallelogram rule once to one grid parallelogram: if one
// diagonal lies on a line of `config` and another line of `config` passes
// through a third vertex, that line gains the fourth vertex. All lines of
// `config` are taken to be parallel. Returns the derivations made.
std::vector<Derivation> try_rule(GridConfig& config, GridPoint corner, GridPoint opposite);

enum class SweepOrder { Lexicographic, ReverseLexicographic, RowFirst };

struct Propagation {
  GridConfig fixpoint;
  std::vector<Derivation> derivations;
  int sweeps = 0;
};

// Runs the rule to a fixpoint over parallelograms inside 1..bound. Throws
// std::logic_error if two lines claim one point.
Propagation propagate(GridConfig config, SweepOrder order, int bound = 6);

Certificate propagate_parallelogram_rule();

struct BruckRyser {
  int n = 0;
  bool excluded = false;
  int residue = 0;                           // n mod 4
  std::optional<std::pair<int, int>> squares;  // a^2 + b^2 = n, a <= b
};

// Throws InputError for n < 2.
BruckRyser bruck_ryser(int n);
bool bruck_ryser_excluded(int n);
Certificate bruck_ryser_certificate(int n);

// Four classes of AG(2, q), q in {3, 4, 5}, form a valid (q, 4) net; an
// order-6 plane would likewise yield a (6, 4) net.
Certificate net_implication_certificate();

}  // namespace officers
