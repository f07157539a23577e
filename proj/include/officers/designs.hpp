#pragma once

// Latin squares, Graeco-Latin pairs and (n, k) nets.
//
// Symbols are 0..n-1. Net points are grid cells in row-major order:
// cell (r, c) of an n x n grid is point r * n + c.

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace officers {

class LatinSquare {
 public:
  int order() const noexcept { return order_; }
  int at(int row, int col) const { return cells_.at(static_cast<std::size_t>(row * order_ + col)); }
  std::span<const int> cells() const noexcept { return cells_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
  friend auto operator<=>(const LatinSquare&, const LatinSquare&) = default;

 private:
  friend LatinSquare validate_latin(const std::vector<std::vector<int>>& cells);
  friend LatinSquare trusted_latin(int order, std::vector<int> cells);
  LatinSquare(int order, std::vector<int> cells) : order_(order), cells_(std::move(cells)) {}

  int order_ = 0;
  std::vector<int> cells_;
};

// Throws InputError for a non-square array or an out-of-range symbol, and
// ValidationError ("latin.row" / "latin.column") for the first repeated
// symbol met in a row-major scan.
LatinSquare validate_latin(const std::vector<std::vector<int>>& cells);

// For search code that maintains the Latin property itself. Checked only
// in debug builds.
LatinSquare trusted_latin(int order, std::vector<int> cells);

// Applies row, column and symbol permutations: result(rows[r], cols[c]) =
// symbols[s(r, c)].
LatinSquare permute(const LatinSquare& s, std::span<const int> rows, std::span<const int> cols,
                    std::span<const int> symbols);

struct GraecoPair {
  LatinSquare latin;
  LatinSquare greek;
};

// Throws InputError when the orders differ.
GraecoPair make_graeco_pair(LatinSquare latin, LatinSquare greek);

struct SymbolPair {
  int latin = 0;
  int greek = 0;
  friend auto operator<=>(const SymbolPair&, const SymbolPair&) = default;
};

struct DuplicatedPair {
  SymbolPair pair;
  int count = 0;
  friend bool operator==(const DuplicatedPair&, const DuplicatedPair&) = default;
};

struct OrthogonalityDefect {
  std::vector<DuplicatedPair> duplicated;  // sorted by pair
  std::vector<SymbolPair> missing;         // sorted

  bool empty() const noexcept { return duplicated.empty() && missing.empty(); }
  // Sum of (count - 1) over duplicated pairs; always equals missing.size().
  int excess() const noexcept;
};

OrthogonalityDefect orthogonality_defect(const GraecoPair& p);

struct LineId {
  int cls = 0;
  int index = 0;
  friend auto operator<=>(const LineId&, const LineId&) = default;
};

using Line = std::vector<int>;
using ParallelClass = std::vector<Line>;

class Net {
 public:
  int order() const noexcept { return order_; }
  int class_count() const noexcept { return static_cast<int>(classes_.size()); }
  int point_count() const noexcept { return order_ * order_; }
  int line_count() const noexcept { return order_ * class_count(); }

  const std::vector<ParallelClass>& classes() const noexcept { return classes_; }
  const Line& line(LineId id) const;
  // Index of the line of class `cls` through `point`.
  int line_through(int cls, int point) const;

  // Lines sorted within each class; used for structural equality.
  std::vector<ParallelClass> canonical_classes() const;

  friend bool operator==(const Net&, const Net&) = default;

 private:
  friend Net validate_net(int order, std::vector<ParallelClass> classes);
  Net(int order, std::vector<ParallelClass> classes);

  int order_ = 0;
  std::vector<ParallelClass> classes_;
  std::vector<std::vector<int>> through_;  // through_[cls][point] -> line index
};

// Checks both net axioms exhaustively. Each line is stored sorted; the
// order of lines within a class is preserved. Throws InputError for
// out-of-range indices or an empty class list, and ValidationError
// ("net.axiom1" / "net.axiom2") for the first violation.
Net validate_net(int order, std::vector<ParallelClass> classes);

// Rows, columns, then one class per square whose line s collects the cells
// holding symbol s. Throws ValidationError ("mols.not_orthogonal") naming
// the first non-orthogonal pair.
Net net_from_mols(std::span<const LatinSquare> squares);

// Inverse of net_from_mols: class 0 indexes rows, class 1 columns, and each
// further class yields one square (cell value = index of its line).
std::vector<LatinSquare> squares_from_net(const Net& net);

// The (n, 2) net of rows and columns.
Net grid_net(int order);

// Square with cell (r, c) = (r + c) mod n.
LatinSquare cyclic_square(int order);

}  // namespace officers
