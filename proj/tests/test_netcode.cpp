#include <doctest.h>

#include "officers/affine.hpp"
#include "officers/designs.hpp"
#include "officers/errors.hpp"
#include "officers/mols_search.hpp"
#include "officers/netcode.hpp"
#include "support/oracles.hpp"

using namespace officers;
using officers::testing::Bits;

namespace {

Net four_class_net(int q) {
  auto classes = ag2(q).net().classes();
  classes.resize(4);
  return validate_net(q, std::move(classes));
}

Net single_class_net(int n) {
  auto classes = grid_net(n).classes();
  classes.resize(1);
  return validate_net(n, std::move(classes));
}

// Generators as 0/1 rows built from the net's point lists directly.
std::vector<Bits> generator_bits(const Net& net) {
  std::vector<Bits> rows;
  for (const auto& cls : net.classes()) {
    for (const auto& line : cls) {
      Bits b(static_cast<std::size_t>(net.point_count()), 0);
      for (int p : line) b[static_cast<std::size_t>(p)] = 1;
      rows.push_back(b);
    }
  }
  return rows;
}

}  // namespace

TEST_CASE("code dimensions match the elimination and closure oracles") {
  const Net grid = grid_net(6);
  const NetCode g = build_code(grid);
  CHECK(g.generators.row_count() == 12);
  CHECK(g.code_dim == 11);
  CHECK(static_cast<int>(g.code_dim) == officers::testing::naive_rank(generator_bits(grid)));

  for (int q : {3, 4, 5}) {
    const Net net = four_class_net(q);
    const NetCode code = build_code(net);
    const auto bits = generator_bits(net);
    CHECK(static_cast<int>(code.code_dim) == officers::testing::naive_rank(bits));
    if (q <= 4) CHECK(static_cast<int>(code.hull_dim) == officers::testing::hull_dim_by_closure(bits));
    CHECK(code.hull_dim <= code.code_dim);
  }

  CHECK(build_code(single_class_net(5)).code_dim == 5);
}

TEST_CASE("even-order four-class nets split off the hull") {
  const Net net = four_class_net(4);
  const NetCode code = build_code(net);
  CHECK(code.code_dim == code.hull_dim + 4);
  CHECK(static_cast<int>(code.code_dim) <= lemma_bound(4));
  CHECK(static_cast<int>(code.code_dim) <= 4 * 4 - 3);
}

TEST_CASE("class Gram matrices") {
  std::vector<LineId> reps{{0, 0}, {1, 2}, {2, 1}, {3, 3}};
  const auto g4 = class_gram(four_class_net(4), reps);
  CHECK(g4 == GF2Matrix::from_strings({"0111", "1011", "1101", "1110"}));
  CHECK(rank(g4) == 4);
  const auto g5 = class_gram(four_class_net(5), reps);
  CHECK(g5 == GF2Matrix::from_strings({"1111", "1111", "1111", "1111"}));
  CHECK(rank(g5) == 1);
  std::vector<LineId> bad{{0, 0}, {0, 1}, {2, 1}, {3, 3}};
  CHECK_THROWS_AS(class_gram(four_class_net(4), bad), InputError);
}

TEST_CASE("lemma bound") {
  CHECK(lemma_bound(6) == 20);
  CHECK(lemma_bound(4) == 10);
  CHECK(lemma_bound(2) == 4);
  CHECK_THROWS_AS(lemma_bound(5), UnsupportedError);
  CHECK_THROWS_AS(lemma_bound(6, 3), UnsupportedError);
}

TEST_CASE("class dependencies") {
  const Net grid = grid_net(6);
  const auto deps = class_dependencies(grid);
  CHECK(deps.size() == 1);
  CHECK(build_code(grid).code_dim == 12 - deps.size());
  CHECK(class_dependencies(single_class_net(4)).empty());

  for (int q : {3, 4, 5}) {
    const Net net = four_class_net(q);
    const NetCode code = build_code(net);
    const auto d = class_dependencies(net);
    CHECK(d.size() == 3);
    for (const auto& coeffs : d) CHECK(combine(code.generators, coeffs).is_zero());
    CHECK(code.code_dim <= static_cast<std::size_t>(q * 4 - 3));
  }
}

TEST_CASE("structural properties of net codes") {
  for (int q : {3, 4, 5}) {
    const Net net = four_class_net(q);
    const NetCode code = build_code(net);
    for (const auto& row : code.generators.rows()) CHECK(row.weight() == static_cast<std::size_t>(q));
    CHECK(in_span(code.generators, all_ones(net)));
    const auto hull = hull_basis(code.generators);
    for (int cls = 0; cls < 4; ++cls) {
      const auto diff = characteristic_vector(net, {cls, 0}) ^ characteristic_vector(net, {cls, 1});
      if (q % 2 == 0) CHECK(in_span(hull, diff));
    }
  }
}

TEST_CASE("code report") {
  const auto r = code_report(four_class_net(4));
  CHECK(r["n"] == 4);
  CHECK(r["k"] == 4);
  CHECK(r["bound"] == 10);
  CHECK(code_report(four_class_net(5))["bound"].is_null());
}
