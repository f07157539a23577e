#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "officers/designs.hpp"
#include "officers/designs_io.hpp"
#include "officers/errors.hpp"
#include "officers/mols_search.hpp"

using namespace officers;

namespace {

const std::filesystem::path kFixtures = OFFICERS_FIXTURE_DIR;

LatinSquare shift_square(int n, int step) {
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) cells[r][c] = (step * r + c) % n;
  }
  return validate_latin(cells);
}

}  // namespace

TEST_CASE("validate_latin") {
  CHECK(validate_latin({{0, 1}, {1, 0}}).order() == 2);
  try {
    validate_latin({{0, 0}, {1, 1}});
    FAIL("expected a row violation");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "latin.row");
    CHECK(e.detail()["row"] == 0);
  }
  CHECK_THROWS_AS(validate_latin({{0, 1}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(validate_latin({{0, 1}, {1}}), InputError);
  CHECK_THROWS_AS(validate_latin({{0, 2}, {1, 0}}), InputError);
}

TEST_CASE("Euler's displayed pair has the two duplicated and two missing pairs") {
  const auto p = load_pair_file(kFixtures / "euler_pair.txt");
  CHECK(p.pair.latin.order() == 6);
  CHECK(p.latin_labels == std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
  const auto defect = orthogonality_defect(p.pair);
  auto label = [&](const SymbolPair& s) {
    return p.latin_labels[static_cast<std::size_t>(s.latin)] + p.greek_labels[static_cast<std::size_t>(s.greek)];
  };
  std::vector<std::string> dup, miss;
  for (const auto& d : defect.duplicated) {
    dup.push_back(label(d.pair));
    CHECK(d.count == 2);
  }
  for (const auto& m : defect.missing) miss.push_back(label(m));
  std::sort(dup.begin(), dup.end());
  std::sort(miss.begin(), miss.end());
  CHECK(dup == std::vector<std::string>{"bζ", "dε"});
  CHECK(miss == std::vector<std::string>{"bε", "dζ"});
  CHECK(defect.excess() == static_cast<int>(defect.missing.size()));

  // The Latin component alone is a valid square.
  const auto latin = load_latin_file(kFixtures / "euler_latin.txt");
  CHECK(latin.square == p.pair.latin);

  // Its symbol classes would contain lines meeting twice.
  const std::vector<LatinSquare> both{p.pair.latin, p.pair.greek};
  try {
    net_from_mols(both);
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "mols.not_orthogonal");
  }
}

TEST_CASE("orthogonality defect") {
  const auto a = cyclic_square(3);
  const auto b = shift_square(3, 2);
  CHECK(orthogonality_defect(make_graeco_pair(a, b)).empty());
  for (int n = 2; n <= 6; ++n) {
    const auto s = cyclic_square(n);
    const auto defect = orthogonality_defect(make_graeco_pair(s, s));
    CHECK_FALSE(defect.empty());
    CHECK(defect.missing.size() == static_cast<std::size_t>(n * n - n));
    CHECK(defect.excess() == static_cast<int>(defect.missing.size()));
  }
  CHECK_THROWS_AS(make_graeco_pair(cyclic_square(3), cyclic_square(4)), InputError);
}

TEST_CASE("nets from squares") {
  const std::vector<LatinSquare> one{cyclic_square(3)};
  const Net n3 = net_from_mols(one);
  CHECK(n3.class_count() == 3);
  CHECK(n3.line_count() == 9);
  CHECK(n3.point_count() == 9);

  const std::vector<LatinSquare> two{cyclic_square(3), shift_square(3, 2)};
  const Net n34 = net_from_mols(two);
  CHECK(n34.class_count() == 4);
  const auto back = squares_from_net(n34);
  REQUIRE(back.size() == 2);
  CHECK(orthogonality_defect(make_graeco_pair(back[0], back[1])).empty());
  // Relabeling within a class is the only freedom.
  for (int i = 0; i < 2; ++i) {
    std::map<int, int> relabel;
    bool consistent = true;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        auto [it, fresh] = relabel.emplace(two[i].at(r, c), back[i].at(r, c));
        consistent = consistent && it->second == back[i].at(r, c);
      }
    }
    CHECK(consistent);
  }

  // Two orthogonal squares of order 4 from the search.
  const auto s4 = generate_reduced(4);
  std::optional<LatinSquare> mate;
  LatinSquare base = s4.front();
  for (const auto& s : s4) {
    if ((mate = find_mate(s))) {
      base = s;
      break;
    }
  }
  REQUIRE(mate);
  const std::vector<LatinSquare> mols{base, *mate};
  CHECK(net_from_mols(mols).class_count() == 4);
}

TEST_CASE("validate_net") {
  const Net grid = grid_net(6);
  CHECK(grid.class_count() == 2);
  CHECK(grid.line_through(0, 7) == 1);
  CHECK(grid.line_through(1, 7) == 1);
  auto classes = grid.classes();
  classes[1] = classes[0];
  try {
    validate_net(6, classes);
    FAIL("expected axiom 2 violation");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "net.axiom2");
  }
  auto broken = grid.classes();
  broken[0][0][0] = broken[0][1][0];
  try {
    validate_net(6, broken);
    FAIL("expected axiom 1 violation");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "net.axiom1");
  }
  CHECK_THROWS_AS(validate_net(6, {}), InputError);
}

TEST_CASE("permute keeps the Latin property") {
  const auto s = cyclic_square(4);
  const std::vector<int> rows{2, 0, 3, 1}, cols{1, 2, 3, 0}, syms{3, 1, 0, 2};
  const auto t = permute(s, rows, cols, syms);
  CHECK(t.at(2, 1) == syms[static_cast<std::size_t>(s.at(0, 0))]);
  CHECK_NOTHROW(validate_latin(t.rows()));
}

TEST_CASE("file formats") {
  const auto tmp = std::filesystem::temp_directory_path() / "officers_designs_test";
  std::filesystem::create_directories(tmp);

  const auto s = parse_latin("# comment\nx y\ny x\n");
  CHECK(s.labels == std::vector<std::string>{"x", "y"});
  CHECK_THROWS_AS(parse_latin("a b\nb\n"), InputError);
  CHECK_THROWS_AS(load_latin_file(tmp / "missing.txt"), InputError);

  const auto pair = make_graeco_pair(cyclic_square(3), shift_square(3, 2));
  const auto text = format_pair(pair);
  const auto reread = parse_pair(text);
  CHECK(orthogonality_defect(reread.pair).empty());

  const Net net = grid_net(4);
  const auto json_text = net_to_json(net).dump();
  CHECK(parse_net_json(json_text).canonical_classes() == net.canonical_classes());
  CHECK_THROWS_AS(parse_net_json(R"({"n": 4, "k": 3, "classes": []})"), InputError);
  CHECK_THROWS_AS(parse_net_json("not json"), InputError);

  const auto [latin, greek] = split_first_codepoint("bζ");
  CHECK(latin == "b");
  CHECK(greek == "ζ");
  std::filesystem::remove_all(tmp);
}
