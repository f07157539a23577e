#include <doctest.h>

#include <algorithm>

#include "officers/affine.hpp"
#include "officers/errors.hpp"

using namespace officers;

namespace {

GridPoint pt(const char* s) { return GridPoint::parse(s); }

std::set<GridPoint> pts(std::initializer_list<const char*> names) {
  std::set<GridPoint> out;
  for (const char* n : names) out.insert(pt(n));
  return out;
}

}  // namespace

TEST_CASE("small fields") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const FiniteField f(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
  CHECK_THROWS_AS(FiniteField(6), UnsupportedError);
  CHECK_THROWS_AS(FiniteField(16), UnsupportedError);
}

TEST_CASE("ag2 planes") {
  const auto p2 = ag2(2);
  CHECK(p2.point_count() == 4);
  CHECK(p2.net().line_count() == 6);
  CHECK(p2.net().class_count() == 3);
  const auto p3 = ag2(3);
  CHECK(p3.point_count() == 9);
  CHECK(p3.net().line_count() == 12);
  CHECK(p3.net().class_count() == 4);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto plane = ag2(q);
    const int n = plane.point_count();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const LineId l = plane.join(a, b);
        const auto& line = plane.net().line(l);
        CHECK(std::count(line.begin(), line.end(), a) == 1);
        CHECK(std::count(line.begin(), line.end(), b) == 1);
      }
    }
  }
  CHECK_THROWS_AS(ag2(6), UnsupportedError);
  CHECK_THROWS_AS(ag2(10), UnsupportedError);
}

TEST_CASE("plane validation") {
  CHECK_THROWS_AS(validate_plane(grid_net(3)), InputError);
  CHECK_NOTHROW(validate_plane(ag2(3).net()));
}

TEST_CASE("diagonals of parallelograms") {
  const auto p2 = ag2(2);
  CHECK(diagonals_parallel(p2, {0, 1, 3, 2}));

  // Unit square (0,0), (1,0), (1,1), (0,1) of AG(2,3); point (x, y) is y * 3 + x.
  const auto p3 = ag2(3);
  CHECK_FALSE(diagonals_parallel(p3, {0, 1, 4, 3}));
  CHECK_THROWS_AS(diagonals_parallel(p3, {0, 1, 2, 3}), InputError);
  CHECK_THROWS_AS(diagonals_parallel(p3, {0, 1, 1, 3}), InputError);
  CHECK_THROWS_AS(diagonals_parallel(p3, {0, 1, 5, 3}), InputError);

  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto s = survey_parallelograms(ag2(q));
    CHECK(s.parallelograms > 0);
    CHECK(s.all_parallel() == (q % 2 == 0));
    CHECK(s.witness.has_value() == (q % 2 == 1));
    if (s.witness) CHECK_FALSE(diagonals_parallel(ag2(q), *s.witness));
  }
  CHECK(survey_parallelograms(ag2(2)).vertex_sets == 1);
}

TEST_CASE("grid points and quadrants") {
  CHECK(pt("45").x == 4);
  CHECK(pt("45").y == 5);
  CHECK(pt("45").name() == "45");
  CHECK_THROWS_AS(GridPoint::parse("70"), InputError);
  CHECK(quadrant(pt("22")) == Quadrant::LL);
  CHECK(quadrant(pt("52")) == Quadrant::LR);
  CHECK(quadrant(pt("25")) == Quadrant::UL);
  CHECK(quadrant(pt("55")) == Quadrant::UR);

  GridConfig c;
  c.place("L", pt("11"));
  CHECK_THROWS_AS(c.place("L", pt("13")), InputError);
  CHECK(c.owner(pt("11")) == "L");
  CHECK_FALSE(c.owner(pt("12")));
}

TEST_CASE("LL and UR balance") {
  CHECK(ll_ur_counts({1, 2, 3, 4, 5, 6}) == std::pair{3, 3});
  CHECK(ll_ur_counts({4, 5, 6, 1, 2, 3}) == std::pair{0, 0});
  const auto c = ll_ur_balance_check();
  CHECK(c.passed());
  CHECK(c.payload["balanced"] == 720);
}

TEST_CASE("parallel distribution") {
  const auto c = parallel_distribution_check();
  CHECK(c.passed());
  CHECK(c.payload["R"]["count"] == 6);
  CHECK(c.payload["R"]["distributions"] == nlohmann::json::array({{1, 1, 1, 1, 2}}));
  CHECK(c.payload["D"]["max_LL_points_on_a_parallel"] == 2);
}

TEST_CASE("collinear triple") {
  const auto c = collinear_triple_check();
  CHECK(c.passed());
  CHECK(c.display == std::vector<std::string>{"11 23 32 R", "12 21 33 R", "12 23 31 D", "13 21 32 D"});
  CHECK(c.children.size() == 4);
  CHECK_FALSE(c.payload["rejected"].empty());
  CHECK(c.children[0].payload["parallel_to"] == "D");
}

TEST_CASE("triangle sides") {
  const auto c = triangle_side_check();
  CHECK(c.passed());
  CHECK(c.payload["R_and_D_in_LL"] == nlohmann::json::array({"22"}));
  REQUIRE(c.children.size() == 3);
  for (const auto& side : c.children) CHECK(side.payload["meeting_R_and_D_once_each"] == 0);
}

TEST_CASE("parallelogram rule") {
  GridConfig seed = propagation_seed();
  const auto first = try_rule(seed, pt("11"), pt("33"));
  REQUIRE(first.size() == 1);
  CHECK(first[0].line == "A");
  CHECK(first[0].diagonal_line == "R");
  CHECK(first[0].added == pt("31"));

  const auto second = try_rule(seed, pt("21"), pt("34"));
  REQUIRE(second.size() == 1);
  CHECK(second[0].diagonal_line == "D");
  CHECK(second[0].from == pt("31"));
  CHECK(second[0].added == pt("24"));

  const auto lex = propagate(propagation_seed(), SweepOrder::Lexicographic);
  CHECK(lex.fixpoint.lines.at("A") == pts({"13", "24", "31", "42"}));
  CHECK(lex.fixpoint.lines.at("B") == pts({"14", "23", "32", "41"}));
  CHECK(lex.derivations.front().added == pt("31"));
  for (auto order : {SweepOrder::ReverseLexicographic, SweepOrder::RowFirst}) {
    CHECK(propagate(propagation_seed(), order).fixpoint.lines == lex.fixpoint.lines);
  }

  const auto c = propagate_parallelogram_rule();
  CHECK(c.passed());
  CHECK(c.payload["stuck"] == true);
  CHECK(c.display.size() == 7);
  CHECK(c.display[2] == "y=4 | B | A | D | R | . | . |");
}

TEST_CASE("conflicting propagation is reported") {
  GridConfig c;
  c.place("K", pt("11"));
  c.place("K", pt("22"));
  c.place("M", pt("12"));
  c.place("N", pt("21"));
  CHECK_THROWS_AS(try_rule(c, pt("11"), pt("22")), std::logic_error);
}

TEST_CASE("Bruck-Ryser") {
  for (int n : {6, 14, 21, 22}) CHECK(bruck_ryser_excluded(n));
  for (int n : {4, 10, 12}) CHECK_FALSE(bruck_ryser_excluded(n));
  CHECK(bruck_ryser(10).squares == std::pair{1, 3});
  CHECK(bruck_ryser(4).residue == 0);
  CHECK(bruck_ryser(12).residue == 0);
  CHECK_FALSE(bruck_ryser(21).squares);
  CHECK_THROWS_AS(bruck_ryser(1), InputError);
  CHECK(bruck_ryser_certificate(6).payload["excluded"] == true);
}

TEST_CASE("net implication") { CHECK(net_implication_certificate().passed()); }
