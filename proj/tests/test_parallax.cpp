#include <doctest.h>

#include <random>

#include "officers/affine.hpp"
#include "officers/errors.hpp"
#include "officers/netcode.hpp"
#include "officers/parallax.hpp"
#include "support/oracles.hpp"
#include "support/seed.hpp"

using namespace officers;

namespace {

Net four_class_net(int q) {
  auto classes = ag2(q).net().classes();
  classes.resize(4);
  return validate_net(q, std::move(classes));
}

// Points on exactly j lines, counted from the point lists.
std::array<int, 5> direct_profile(const Net& net, const std::vector<LineId>& members) {
  std::vector<int> hits(static_cast<std::size_t>(net.point_count()), 0);
  for (const auto& id : members) {
    for (int p : net.line(id)) ++hits[static_cast<std::size_t>(p)];
  }
  std::array<int, 5> out{};
  for (int h : hits) ++out[static_cast<std::size_t>(h)];
  return out;
}

std::vector<LineId> from_mask(const Net& net, unsigned mask) {
  std::vector<LineId> out;
  for (int cls = 0; cls < net.class_count(); ++cls) {
    for (int i = 0; i < net.order(); ++i) {
      if (mask >> (cls * net.order() + i) & 1U) out.push_back({cls, i});
    }
  }
  return out;
}

void check_identities(const Net& net, const std::vector<LineId>& members) {
  const LineSet set(net, members);
  const PointProfile pp = profile(set);
  const auto direct = direct_profile(net, members);
  CHECK(pp.p1 == direct[1]);
  CHECK(pp.p2 == direct[2]);
  CHECK(pp.p3 == direct[3]);
  CHECK(pp.p4 == direct[4]);
  const Parallax pi = set.parallax();
  CHECK(net.order() * pi.l() == pp.p1 + 2 * pp.p2 + 3 * pp.p3 + 4 * pp.p4);
  CHECK(pi.m() == pp.p2 + 3 * pp.p3 + 6 * pp.p4);
  CHECK(static_cast<int>(set.sum().weight()) == pp.p1 + pp.p3);
  const WeightFormula f = weight_decomposition(pi, net.order());
  CHECK(f.evaluate(pp.p3, pp.p4) == static_cast<int>(set.sum().weight()));
}

}  // namespace

TEST_CASE("parallax arithmetic") {
  const auto p = Parallax::parse("2226");
  CHECK(p.counts == std::array<int, 4>{2, 2, 2, 6});
  CHECK(p.l() == 12);
  CHECK(p.m() == 4 + 4 + 12 + 4 + 12 + 12);
  CHECK(p.to_string() == "2226");
  CHECK_THROWS_AS(Parallax::parse("222"), InputError);
  CHECK_THROWS_AS(Parallax::parse("22a2"), InputError);
}

TEST_CASE("weight decomposition") {
  CHECK(weight_decomposition(Parallax::parse("2240")).base == 8);
  CHECK(weight_decomposition(Parallax::parse("3331")).base == -12);
  CHECK(weight_decomposition(Parallax::parse("0000")).base == 0);
}

TEST_CASE("switching") {
  const std::vector<int> last_two{2, 3};
  CHECK(switch_classes(Parallax::parse("2226"), last_two).to_string() == "2240");
  CHECK(switch_classes(Parallax::parse("1234"), std::vector<int>{}).to_string() == "1234");
  const std::vector<int> one{1};
  CHECK_THROWS_AS(switch_classes(Parallax::parse("1234"), one), InputError);
  CHECK(switch_classes(Parallax::parse("1234"), one, SwitchParity::AllowOdd).to_string() == "1434");
  for (const auto& s : {std::vector<int>{0, 1}, std::vector<int>{1, 3}, std::vector<int>{0, 1, 2, 3}}) {
    const auto p = Parallax::parse("3152");
    CHECK(switch_classes(switch_classes(p, s), s) == p);
  }
}

TEST_CASE("profiles of small line sets") {
  for (int q : {3, 4, 5}) {
    const Net net = four_class_net(q);
    CHECK(profile(LineSet(net, {{0, 0}})) == PointProfile{q, 0, 0, 0});
    CHECK(profile(LineSet(net, {{0, 0}, {1, 0}})) == PointProfile{2 * q - 2, 1, 0, 0});
    CHECK(profile(LineSet(net, {{0, 0}, {0, 1}})) == PointProfile{2 * q, 0, 0, 0});
  }
  CHECK_THROWS_AS(LineSet(four_class_net(3), {{4, 0}}), InputError);
  CHECK_THROWS_AS(profile(LineSet(grid_net(4), {{0, 0}})), UnsupportedError);
}

TEST_CASE("identities hold for every line set of the (3, 4) net") {
  const Net net = ag2(3).net();
  REQUIRE(net.class_count() == 4);
  for (unsigned mask = 0; mask < (1U << 12); ++mask) check_identities(net, from_mask(net, mask));
}

TEST_CASE("identities and even switching on random line sets") {
  std::mt19937_64 rng(officers::testing::test_seed());
  for (int q : {4, 5}) {
    const Net net = four_class_net(q);
    std::bernoulli_distribution bit(0.5);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<LineId> members;
      for (int cls = 0; cls < 4; ++cls) {
        for (int i = 0; i < q; ++i) {
          if (bit(rng)) members.push_back({cls, i});
        }
      }
      check_identities(net, members);
      const LineSet set(net, members);
      for (const auto& pair : {std::vector<int>{0, 1}, std::vector<int>{2, 3}, std::vector<int>{0, 1, 2, 3}}) {
        CHECK(switch_lines(set, pair).sum() == set.sum());
      }
      const std::vector<int> single{2};
      CHECK(switch_lines(set, single).sum() == (set.sum() ^ all_ones(net)));
    }
  }
}

TEST_CASE("zero-weight parallaxes") {
  const auto list = enumerate_zero_parallaxes();
  std::vector<std::string> names;
  for (const auto& p : list) names.push_back(p.to_string());
  CHECK(names == std::vector<std::string>{"2222", "2226", "3330", "3332"});
  CHECK(enumerate_zero_parallaxes(EnumerationOrder::SolveThenFilter) == list);

  std::vector<std::string> naive;
  for (const auto& t : officers::testing::naive_zero_parallaxes()) {
    naive.push_back(Parallax{t}.to_string());
  }
  std::sort(naive.begin(), naive.end());
  CHECK(naive == names);

  CHECK_FALSE(zero_weight_solution(Parallax::parse("2220")));
  const auto s = zero_weight_solution(Parallax::parse("2222"));
  REQUIRE(s);
  CHECK(s->p2 == 24);
  CHECK(s->p4 == 0);
}

TEST_CASE("normalization") {
  CHECK(is_normalized(Parallax::parse("2226")));
  CHECK(is_normalized(Parallax::parse("3330")));
  CHECK_FALSE(is_normalized(Parallax::parse("3303")));
  CHECK_FALSE(is_normalized(Parallax::parse("4000")));
  CHECK_FALSE(is_normalized(Parallax::parse("1200")));

  const auto orbit = switching_orbit(Parallax::parse("0000"));
  CHECK(orbit.contains(Parallax::parse("6600")));
  CHECK(orbit.contains(Parallax::parse("6666")));
  CHECK_FALSE(orbit.contains(Parallax::parse("6000")));

  const auto audit = audit_normalization();
  CHECK(audit.box_size == 2401);
  CHECK(audit.every_orbit_normalizable);
  CHECK(audit.candidates_cover_orbit_closed);
  std::vector<std::string> forms;
  for (const auto& p : audit.orbit_closed_normal_forms) forms.push_back(p.to_string());
  CHECK(forms == std::vector<std::string>{"0000", "2222", "3330", "3332"});
}

TEST_CASE("exclusion certificates") {
  const auto c2226 = exclusion_certificate(Parallax::parse("2226"));
  CHECK(c2226.passed());
  REQUIRE(c2226.children.size() == 2);
  CHECK(c2226.children[0].payload["switched"] == "2240");
  CHECK(c2226.children[1].payload["min_weight"] == 8);

  for (const char* name : {"3330", "3332"}) {
    const auto c = exclusion_certificate(Parallax::parse(name));
    CHECK(c.passed());
    REQUIRE(c.children.size() == 2);
    CHECK(c.children[0].payload["modified"] == "3331");
    CHECK(c.children[0].payload["weight"] == 6);
    CHECK(c.children[1].payload["formula"]["base"] == -12);
  }
  CHECK_THROWS_AS(exclusion_certificate(Parallax::parse("2222")), UnsupportedError);
  CHECK_THROWS_AS(exclusion_certificate(Parallax::parse("1111")), UnsupportedError);
}

TEST_CASE("a perturbed weight formula fails the exclusions") {
  ArithmeticFault fault;
  fault.weight_base_offset = -8;
  CHECK_FALSE(exclusion_certificate(Parallax::parse("2226"), fault).passed());
  fault.weight_base_offset = 2;
  CHECK_FALSE(exclusion_certificate(Parallax::parse("3330"), fault).passed());
}
