#pragma once

// Exhaustive orthogonal-mate search over reduced Latin squares.
//
// A square has an orthogonal mate iff its cells split into n disjoint
// transversals; the mate gives every cell of the k-th transversal symbol k.
// Row, column and symbol permutations preserve mate existence, so scanning
// reduced squares (first row and column 0..n-1) covers every square.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "officers/designs.hpp"

namespace officers {

inline constexpr int kMinSearchOrder = 2;
inline constexpr int kMaxSearchOrder = 7;

bool is_reduced(const LatinSquare& s);

// Emits every reduced Latin square of order n once, in lexicographic
// row-major order. Throws UnsupportedError for n outside 2..7.
class ReducedSquareGenerator {
 public:
  explicit ReducedSquareGenerator(int n);

  std::optional<LatinSquare> next();
  std::uint64_t emitted() const noexcept { return emitted_; }

 private:
  bool advance();

  int n_;
  std::vector<int> cells_;
  std::vector<std::uint32_t> row_used_, col_used_;
  int pos_;          // index into free_cells_ being (re)assigned
  bool done_ = false;
  std::vector<int> free_cells_;
  std::uint64_t emitted_ = 0;
};

std::vector<LatinSquare> generate_reduced(int n);
std::uint64_t count_reduced(int n);

// transversal[r] is the column used in row r.
using Transversal = std::vector<int>;

// All transversals in lexicographic order.
std::vector<Transversal> transversals(const LatinSquare& s);

// The first mate found by exact cover over the transversals, normalized so
// its first row is 0..n-1.
std::optional<LatinSquare> find_mate(const LatinSquare& s);

struct FoundMate {
  std::uint64_t index = 0;  // position in the reduced-square sequence
  LatinSquare square;
  LatinSquare mate;
};

struct OracleOptions {
  int jobs = 1;
  // Stop after the first square (in sequence order) that has a mate.
  bool stop_at_first = false;
  // How many found pairs to keep, lowest index first.
  std::size_t keep_mates = 8;
  // Called with the number of squares checked so far.
  std::function<void(std::uint64_t)> progress;
};

struct OracleResult {
  int order = 0;
  bool exhaustive = true;            // false if stopped at the first mate
  std::uint64_t squares_checked = 0;
  std::uint64_t mates_found = 0;     // squares with at least one mate
  std::vector<FoundMate> mates;
  double elapsed_seconds = 0;
};

// Results do not depend on `jobs`: squares are checked in fixed-size
// batches and merged by index.
OracleResult officers_oracle(int n, const OracleOptions& options = {});

}  // namespace officers
