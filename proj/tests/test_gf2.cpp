#include <doctest.h>

#include <random>

#include "officers/designs.hpp"
#include "officers/errors.hpp"
#include "officers/gf2.hpp"
#include "officers/netcode.hpp"
#include "support/oracles.hpp"
#include "support/seed.hpp"

using namespace officers;
using officers::testing::Bits;

namespace {

GF2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  GF2Matrix m(cols);
  std::bernoulli_distribution bit(0.5);
  for (std::size_t r = 0; r < rows; ++r) {
    GF2Vector v(cols);
    for (std::size_t c = 0; c < cols; ++c) v.set(c, bit(rng));
    m.append(v);
  }
  return m;
}

std::vector<Bits> as_bits(const GF2Matrix& m) {
  std::vector<Bits> out;
  for (const auto& row : m.rows()) {
    Bits b;
    for (char ch : row.to_string()) b.push_back(ch == '1');
    out.push_back(b);
  }
  return out;
}

}  // namespace

TEST_CASE("vectors round-trip through strings and supports") {
  const auto v = GF2Vector::from_string("0110010");
  CHECK(v.size() == 7);
  CHECK(v.weight() == 3);
  CHECK(v.to_string() == "0110010");
  CHECK(v.support() == std::vector<int>{1, 2, 5});
  CHECK(v.first_one() == 1);
  const std::vector<int> support{1, 2, 5};
  CHECK(GF2Vector::from_support(7, support) == v);
  CHECK(GF2Vector(100).is_zero());
  CHECK_THROWS_AS(GF2Vector::from_string("01x"), InputError);
}

TEST_CASE("vectors longer than one word") {
  GF2Vector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.weight() == 3);
  v.flip(64);
  CHECK(v.weight() == 2);
  CHECK(v.support() == std::vector<int>{0, 129});
  CHECK_THROWS(v.test(130));
}

TEST_CASE("dot products") {
  const auto ones = GF2Vector::from_string("111111");
  CHECK(dot(ones, ones) == 0);
  CHECK(dot(ones, GF2Vector(6)) == 0);
  CHECK_THROWS_AS(dot(ones, GF2Vector(5)), InputError);

  const Net grid = grid_net(6);
  CHECK(dot(characteristic_vector(grid, {0, 2}), characteristic_vector(grid, {1, 4})) == 1);
  CHECK(dot(characteristic_vector(grid, {0, 2}), characteristic_vector(grid, {0, 3})) == 0);
}

TEST_CASE("rank examples") {
  CHECK(rank(GF2Matrix::from_strings({"0111", "1011", "1101", "1110"})) == 4);
  CHECK(rank(GF2Matrix::from_strings({"000", "000", "000"})) == 0);
  CHECK(rank(GF2Matrix::identity(5)) == 5);
  CHECK(rank(GF2Matrix::from_strings({"1111", "1111", "1111", "1111"})) == 1);
  CHECK_THROWS_AS(rank(GF2Matrix(4)), InputError);
  CHECK_THROWS_AS(GF2Matrix::from_strings({"101", "10"}), InputError);
}

TEST_CASE("hull examples") {
  CHECK(hull_basis(GF2Matrix::from_strings({"1100", "0011"})).row_count() == 2);
  CHECK(hull_basis(GF2Matrix::from_strings({"10", "01"})).row_count() == 0);
  CHECK_THROWS_AS(hull_basis(GF2Matrix(3)), InputError);
}

TEST_CASE("rref and kernels") {
  const auto m = GF2Matrix::from_strings({"1100", "0110", "1010"});
  const auto r = rref(m);
  CHECK(r.to_string() == "1010\n0110\n");
  const auto k = left_kernel(m);
  REQUIRE(k.row_count() == 1);
  CHECK(k.row(0).to_string() == "111");
  CHECK(combine(m, k.row(0)).is_zero());
  CHECK(in_span(m, GF2Vector::from_string("1010")));
  CHECK_FALSE(in_span(m, GF2Vector::from_string("0001")));
  const auto d = dual_basis(m);
  CHECK(d.row_count() == 2);
  for (const auto& row : d.rows()) {
    for (const auto& g : m.rows()) CHECK(dot(row, g) == 0);
  }
}

TEST_CASE("randomized properties agree with the elimination and closure oracles") {
  std::mt19937_64 rng(officers::testing::test_seed());
  std::uniform_int_distribution<std::size_t> dim(1, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, dim(rng), dim(rng));
    const std::size_t r = rank(m);
    CHECK(r == rank(transpose(m)));
    CHECK(static_cast<int>(r) == officers::testing::naive_rank(as_bits(m)));

    const auto hull = hull_basis(m);
    for (const auto& h : hull.rows()) {
      CHECK(in_span(m, h));
      for (const auto& g : m.rows()) CHECK(dot(h, g) == 0);
    }
    CHECK(static_cast<int>(hull.row_count()) == officers::testing::hull_dim_by_closure(as_bits(m)));
    CHECK(left_kernel(m).row_count() == m.row_count() - r);
  }
}

TEST_CASE("weight of a sum matches the integer overlap") {
  std::mt19937_64 rng(officers::testing::test_seed() + 1);
  std::bernoulli_distribution bit(0.4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 1 + rng() % 150;
    GF2Vector v(len), w(len);
    for (std::size_t i = 0; i < len; ++i) {
      v.set(i, bit(rng));
      w.set(i, bit(rng));
    }
    CHECK((v ^ w).weight() == v.weight() + w.weight() - 2 * overlap(v, w));
  }
}
