#pragma once

// The 2222 case: a zero sum on eight lines, two from each class, has 24
// points, each on exactly two of the eight lines. Tagging the two lines of
// each class with +1 and -1 labels every point by a quadruple with two zero
// and two nonzero entries.
//
// Standard layout on a 6 x 6 grid (rows and columns 1-based, row 1 on top):
// class 0 = columns with x1 = +1/-1 on columns 5/6, class 1 = rows with
// x2 = +1/-1 on rows 5/6, class 2 = Latin letters a..f with x3 = +1/-1 on
// e/f, class 3 = Greek letters alpha..zeta with x4 = +1/-1 on epsilon/zeta.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "officers/certificate.hpp"
#include "officers/designs.hpp"

namespace officers {

struct PointTag {
  std::array<int, 4> x{};

  // "100-1" style: entries 1, 0, -1 concatenated.
  std::string to_string() const;
  static PointTag parse(std::string_view text);
  PointTag negated() const;
  int zero_count() const;

  friend auto operator<=>(const PointTag&, const PointTag&) = default;
};

struct GridPos {
  int row = 1;  // 1-based
  int col = 1;
  friend auto operator<=>(const GridPos&, const GridPos&) = default;
};

// All 24 quadruples with two zero and two +-1 entries.
std::vector<PointTag> all_tags();

// The 24 tagged cells of the standard layout.
std::map<GridPos, PointTag> standard_tagging();

// A non-Lambda line is labeled by its three tagged points (sorted).
using TagTriple = std::array<PointTag, 3>;
// The four non-Lambda lines of one class (sorted).
using LineList = std::vector<TagTriple>;

TagTriple make_triple(std::array<PointTag, 3> tags);
LineList negated(const LineList& list);
// Multiplies coordinate i of every tag by signs[i].
LineList with_signs(const LineList& list, const std::array<int, 4>& signs);

// Every way to split the 12 tags with x[cls] = 0 into four triples, each
// meeting every Lambda line of the other three classes exactly once.
// `cls` is zero-based.
std::vector<LineList> enumerate_line_lists(int cls);

// The sign-change group (2^4 patterns) acting on one choice of line list
// per class reaches all 16 choices.
bool sign_changes_act_transitively();

// Tag triples for the non-Lambda lines a..d and alpha..delta used to fill
// in the layout.
std::map<std::string, TagTriple> standard_line_assignment();

// Latin symbols a..f and Greek symbols alpha..zeta are both 0..5.
std::string latin_name(int symbol);
std::string greek_name(int symbol);

class PartialGraecoSquare {
 public:
  explicit PartialGraecoSquare(int order);

  int order() const noexcept { return order_; }
  // Zero-based coordinates.
  const std::optional<SymbolPair>& at(int row, int col) const;
  void set(int row, int col, std::optional<SymbolPair> value);
  std::vector<GridPos> blanks() const;  // 1-based, row-major
  int filled_count() const;

  // Empty if the filled cells repeat no Latin or Greek symbol in a row or
  // column and repeat no pair; otherwise a description of the first clash.
  std::optional<std::string> conflict() const;

  std::vector<std::string> render() const;
  friend bool operator==(const PartialGraecoSquare&, const PartialGraecoSquare&) = default;

 private:
  int order_;
  std::vector<std::optional<SymbolPair>> cells_;
};

// Fills the layout from the tagging and the line assignment.
PartialGraecoSquare build_partial_square();

// The two-thirds square as printed (tokens like "eε", "." for blanks).
PartialGraecoSquare reference_partial_square();
PartialGraecoSquare parse_partial_square(std::string_view text);

enum class BlankOrder { RowMajor, ColumnMajor, ReverseRowMajor };

struct CompletionOptions {
  // Cells to fill (1-based). Empty: every blank, in `order`.
  std::vector<GridPos> cells;
  // Candidate pairs. Empty: all n^2 pairs.
  std::vector<SymbolPair> domain;
  BlankOrder order = BlankOrder::RowMajor;
};

struct CompletionSearch {
  std::uint64_t completions = 0;
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> placements_per_depth;
};

// Exhaustive backtracking; pairs are tried lexicographically.
CompletionSearch count_completions(const PartialGraecoSquare& p, const CompletionOptions& options = {});

struct ExclusionTable {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rows;  // (latin, greek) per row
  std::vector<std::pair<std::vector<int>, std::vector<int>>> cols;
  std::vector<SymbolPair> used_pairs;
};

// Symbols of the alphabet {0..alphabet-1} x {0..alphabet-1} already used in
// each of the first `block` rows and columns.
ExclusionTable exclusion_table(const PartialGraecoSquare& p, int block = 4, int alphabet = 4);

// Replays the counting argument on the row and column with equal
// exclusions: every choice for the center of their cross leaves fewer
// distinct pairs than the four other cross cells need.
Certificate cross_certificate(const PartialGraecoSquare& p);

// Tagging, line lists, reproduced square, exhaustive count and cross
// argument, as one certificate tree.
Certificate case2222_certificate();

}  // namespace officers
