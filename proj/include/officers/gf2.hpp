#pragma once

// Linear algebra over the two-element field on bit-packed vectors.
//
// Index i of a vector is bit (i % 64) of word (i / 64). For net codes,
// grid point (row r, column c) of an n x n grid is index r * n + c
// (zero-based).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace officers {

class GF2Vector {
 public:
  GF2Vector() = default;
  explicit GF2Vector(std::size_t length);

  // "0110" -> bits 1 and 2 set. Throws InputError on other characters.
  static GF2Vector from_string(std::string_view bits);
  static GF2Vector from_support(std::size_t length, std::span<const int> support);

  std::size_t size() const noexcept { return length_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  // Lowest set index, if any.
  std::optional<std::size_t> first_one() const noexcept;
  std::vector<int> support() const;

  GF2Vector& operator^=(const GF2Vector& other);
  friend GF2Vector operator^(GF2Vector lhs, const GF2Vector& rhs) { return lhs ^= rhs; }
  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
  friend auto operator<=>(const GF2Vector& a, const GF2Vector& b) {
    return a.to_string() <=> b.to_string();
  }

  std::string to_string() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

 private:
  void check_index(std::size_t i) const;

  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

// Sum over P of v(P) w(P), mod 2. Throws InputError on length mismatch.
int dot(const GF2Vector& v, const GF2Vector& w);
// Number of indices set in both vectors.
std::size_t overlap(const GF2Vector& v, const GF2Vector& w);

class GF2Matrix {
 public:
  GF2Matrix() = default;
  // A matrix with no rows still remembers its row length.
  explicit GF2Matrix(std::size_t columns) : columns_(columns) {}
  // Throws InputError if the rows have unequal lengths.
  explicit GF2Matrix(std::vector<GF2Vector> rows);
  static GF2Matrix from_strings(std::initializer_list<std::string_view> rows);
  static GF2Matrix identity(std::size_t n);

  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t column_count() const noexcept { return columns_; }
  bool empty() const noexcept { return rows_.empty(); }

  const GF2Vector& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<GF2Vector>& rows() const noexcept { return rows_; }
  void append(GF2Vector row);

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t columns_ = 0;
  std::vector<GF2Vector> rows_;
};

GF2Matrix transpose(const GF2Matrix& m);

// Dimension of the row space. Throws InputError for a matrix with no rows.
std::size_t rank(const GF2Matrix& m);

// Reduced row-echelon basis of the row space (zero rows dropped). Pivots
// are taken at the leftmost nonzero column, first available row.
GF2Matrix rref(const GF2Matrix& m);

// Basis (in reduced row-echelon form) of {x : x * m = 0}; vectors have
// length row_count(m). These are the linear dependencies among the rows.
GF2Matrix left_kernel(const GF2Matrix& m);

// Basis of span(m)^perp under the standard dot product.
GF2Matrix dual_basis(const GF2Matrix& m);

// Basis of span(g) intersected with span(g)^perp, in reduced row-echelon
// form. Throws InputError for an empty generator set.
GF2Matrix hull_basis(const GF2Matrix& generators);

// m * m^T.
GF2Matrix gram(const GF2Matrix& m);

// x * m, the combination of rows selected by the coefficient vector.
GF2Vector combine(const GF2Matrix& m, const GF2Vector& coefficients);

bool in_span(const GF2Matrix& m, const GF2Vector& v);

}  // namespace officers
