#include "officers/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "officers/errors.hpp"

namespace officers {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t length) { return (length + kWordBits - 1) / kWordBits; }

void require_same_length(const GF2Vector& v, const GF2Vector& w, const char* what) {
  if (v.size() != w.size()) {
    std::ostringstream msg;
    msg << what << ": length mismatch (" << v.size() << " vs " << w.size() << ")";
    throw InputError(msg.str());
  }
}

// In-place Gauss-Jordan elimination on the first `pivot_limit` columns.
// Returns the pivot columns in row order; rows [0, pivots.size()) are the
// nonzero echelon rows.
std::vector<std::size_t> eliminate(std::vector<GF2Vector>& rows, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < pivot_limit && next < rows.size(); ++col) {
    auto found = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end(),
                              [col](const GF2Vector& r) { return r.test(col); });
    if (found == rows.end()) continue;
    std::swap(*found, rows[next]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && rows[i].test(col)) rows[i] ^= rows[next];
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

}  // namespace

GF2Vector::GF2Vector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

GF2Vector GF2Vector::from_string(std::string_view bits) {
  GF2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw InputError("GF2Vector: expected '0' or '1', got '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

GF2Vector GF2Vector::from_support(std::size_t length, std::span<const int> support) {
  GF2Vector v(length);
  for (int i : support) {
    if (i < 0) throw InputError("GF2Vector: negative index in support");
    v.set(static_cast<std::size_t>(i));
  }
  return v;
}

void GF2Vector::check_index(std::size_t i) const {
  if (i >= length_) {
    throw InputError("GF2Vector: index " + std::to_string(i) + " out of range for length " +
                     std::to_string(length_));
  }
}

bool GF2Vector::test(std::size_t i) const {
  check_index(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void GF2Vector::set(std::size_t i, bool value) {
  check_index(i);
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void GF2Vector::flip(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

std::size_t GF2Vector::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool GF2Vector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> GF2Vector::first_one() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return std::nullopt;
}

std::vector<int> GF2Vector::support() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w != 0) {
      out.push_back(static_cast<int>(k * kWordBits) + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& other) {
  require_same_length(*this, other, "xor");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::string GF2Vector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) s[i] = '1';
  }
  return s;
}

std::size_t overlap(const GF2Vector& v, const GF2Vector& w) {
  require_same_length(v, w, "overlap");
  std::size_t count = 0;
  auto a = v.words();
  auto b = w.words();
  for (std::size_t k = 0; k < a.size(); ++k) count += static_cast<std::size_t>(std::popcount(a[k] & b[k]));
  return count;
}

int dot(const GF2Vector& v, const GF2Vector& w) {
  require_same_length(v, w, "dot");
  return static_cast<int>(overlap(v, w) & 1U);
}

GF2Matrix::GF2Matrix(std::vector<GF2Vector> rows) : rows_(std::move(rows)) {
  if (!rows_.empty()) columns_ = rows_.front().size();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != columns_) {
      throw InputError("GF2Matrix: ragged rows (row " + std::to_string(i) + " has length " +
                       std::to_string(rows_[i].size()) + ", expected " +
                       std::to_string(columns_) + ")");
    }
  }
}

GF2Matrix GF2Matrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<GF2Vector> vs;
  for (auto r : rows) vs.push_back(GF2Vector::from_string(r));
  return GF2Matrix(std::move(vs));
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    GF2Vector row(n);
    row.set(i);
    m.append(std::move(row));
  }
  return m;
}

void GF2Matrix::append(GF2Vector row) {
  if (rows_.empty() && columns_ == 0) columns_ = row.size();
  if (row.size() != columns_) {
    throw InputError("GF2Matrix: appended row has length " + std::to_string(row.size()) +
                     ", expected " + std::to_string(columns_));
  }
  rows_.push_back(std::move(row));
}

std::string GF2Matrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

GF2Matrix transpose(const GF2Matrix& m) {
  GF2Matrix t(m.row_count());
  for (std::size_t c = 0; c < m.column_count(); ++c) {
    GF2Vector col(m.row_count());
    for (std::size_t r = 0; r < m.row_count(); ++r) {
      if (m.row(r).test(c)) col.set(r);
    }
    t.append(std::move(col));
  }
  return t;
}

std::size_t rank(const GF2Matrix& m) {
  if (m.empty()) throw InputError("rank: matrix has no rows");
  auto rows = m.rows();
  return eliminate(rows, m.column_count()).size();
}

GF2Matrix rref(const GF2Matrix& m) {
  auto rows = m.rows();
  const auto pivots = eliminate(rows, m.column_count());
  rows.resize(pivots.size());
  GF2Matrix out(m.column_count());
  for (auto& r : rows) out.append(std::move(r));
  return out;
}

GF2Matrix left_kernel(const GF2Matrix& m) {
  const std::size_t cols = m.column_count();
  const std::size_t n = m.row_count();
  // Augment each row with its unit coefficient vector: [row_i | e_i].
  std::vector<GF2Vector> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    GF2Vector a(cols + n);
    for (std::size_t c = 0; c < cols; ++c) {
      if (m.row(i).test(c)) a.set(c);
    }
    a.set(cols + i);
    aug.push_back(std::move(a));
  }
  const auto pivots = eliminate(aug, cols);
  GF2Matrix kernel(n);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i) {
    GF2Vector coeffs(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (aug[i].test(cols + j)) coeffs.set(j);
    }
    kernel.append(std::move(coeffs));
  }
  return rref(kernel);
}

GF2Matrix dual_basis(const GF2Matrix& m) { return left_kernel(transpose(m)); }

GF2Matrix gram(const GF2Matrix& m) {
  GF2Matrix g(m.row_count());
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    GF2Vector row(m.row_count());
    for (std::size_t j = 0; j < m.row_count(); ++j) {
      if (dot(m.row(i), m.row(j)) != 0) row.set(j);
    }
    g.append(std::move(row));
  }
  return g;
}

GF2Vector combine(const GF2Matrix& m, const GF2Vector& coefficients) {
  if (coefficients.size() != m.row_count()) {
    throw InputError("combine: coefficient vector length " + std::to_string(coefficients.size()) +
                     " does not match row count " + std::to_string(m.row_count()));
  }
  GF2Vector sum(m.column_count());
  for (int i : coefficients.support()) sum ^= m.row(static_cast<std::size_t>(i));
  return sum;
}

GF2Matrix hull_basis(const GF2Matrix& generators) {
  if (generators.empty()) throw InputError("hull_basis: empty generator set");
  // With B a basis of C, x * B lies in C-perp iff (B B^T) x = 0.
  const GF2Matrix basis = rref(generators);
  const GF2Matrix kernel = left_kernel(gram(basis));
  GF2Matrix hull(generators.column_count());
  for (const auto& x : kernel.rows()) hull.append(combine(basis, x));
  return rref(hull);
}

bool in_span(const GF2Matrix& m, const GF2Vector& v) {
  if (v.size() != m.column_count()) {
    throw InputError("in_span: vector length does not match matrix");
  }
  GF2Matrix basis = rref(m);
  GF2Vector rest = v;
  // basis is reduced, so clearing each pivot once suffices.
  for (const auto& row : basis.rows()) {
    auto pivot = row.first_one();
    if (pivot && rest.test(*pivot)) rest ^= row;
  }
  return rest.is_zero();
}

}  // namespace officers
