#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "officers/affine.hpp"
#include "officers/designs.hpp"
#include "officers/designs_io.hpp"

using namespace officers;

namespace {

const std::filesystem::path kFixtures = OFFICERS_FIXTURE_DIR;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string("\"") + OFFICERS_CLI_PATH + "\" --quiet " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expected_status) {
  const Run r = run("--format json " + args);
  CHECK(r.status == expected_status);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  return j;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("officers_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p;
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string quoted(const std::filesystem::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("verify commands") {
  const auto officers = run_json("verify officers", 0);
  CHECK(officers["verdict"] == "PASS");
  CHECK(officers["steps"].size() == 5);
  const auto affine = run_json("verify affine", 0);
  CHECK(affine["steps"].size() == 6);

  const Run text = run("verify officers");
  CHECK(text.status == 0);
  CHECK(text.out.find("verdict: PASS") != std::string::npos);
}

TEST_CASE("fault injection fails verification") {
  const auto j = run_json("--weight-fault 1 verify officers", 1);
  CHECK(j["verdict"] == "FAIL");
  CHECK(j["steps"][3]["verdict"] == "FAIL");
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("verify nothing").status == 2);
  CHECK(run("verify officers --jobs 2").status == 2);
  CHECK(run("oracle --order 9").status == 2);
  CHECK(run("oracle").status == 2);
  CHECK(run("bruck-ryser 1").status == 2);
  CHECK(run("--format xml verify officers").status == 2);
  CHECK(run("latin validate /nonexistent/file").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("oracle command") {
  const auto six = run_json("oracle --order 6", 0);
  CHECK(six["steps"][0]["payload"]["squares_checked"] == 9408);
  CHECK(six["steps"][0]["payload"]["mates_found"] == 0);

  TempDir dir;
  const auto dump = dir.path() / "mate.txt";
  const auto five = run_json("oracle --order 5 --dump-mates " + quoted(dump), 0);
  CHECK(five["steps"][0]["payload"]["mates_found"].get<int>() > 0);
  const auto pair = load_pair_file(dump);
  CHECK(orthogonality_defect(pair.pair).empty());
  CHECK(run("pair defect " + quoted(dump)).status == 0);
}

TEST_CASE("square and pair files") {
  const auto latin = run_json("latin validate " + quoted(kFixtures / "euler_latin.txt"), 0);
  CHECK(latin["order"] == 6);
  const auto bad = run_json("latin validate " + quoted(kFixtures / "bad_latin.txt"), 1);
  CHECK(bad["kind"] == "latin.row");

  const auto defect = run_json("pair defect " + quoted(kFixtures / "euler_pair.txt"), 1);
  CHECK(defect["orthogonal"] == false);
  CHECK_FALSE(defect["missing"].empty());
  CHECK(defect["missing"].size() == defect["duplicated"].size());

  TempDir dir;
  const auto ragged = dir.write("ragged.txt", "0 1\n1\n");
  CHECK(run("latin validate " + quoted(ragged)).status == 2);
  const auto lonely = dir.write("lonely.txt", "a b\nb a\n");
  CHECK(run("pair defect " + quoted(lonely)).status == 2);
}

TEST_CASE("net, code and plane files") {
  TempDir dir;
  const auto plane3 = dir.write("ag3.json", net_to_json(ag2(3).net()).dump());
  const auto plane4 = dir.write("ag4.json", net_to_json(ag2(4).net()).dump());
  const auto grid = dir.write("grid.json", net_to_json(grid_net(5)).dump());

  const auto net = run_json("net validate " + quoted(plane3), 0);
  CHECK(net["k"] == 4);

  const auto code = run_json("code report " + quoted(plane4), 0);
  CHECK(code["verdict"] == "PASS");

  const auto odd = run_json("plane check " + quoted(plane3), 0);
  CHECK(odd["diagonals_parallel"] == false);
  CHECK_FALSE(odd["witness"].is_null());
  const auto even = run_json("plane check " + quoted(plane4), 0);
  CHECK(even["diagonals_parallel"] == true);
  CHECK(run("plane check " + quoted(grid)).status == 2);

  auto broken = net_to_json(ag2(3).net());
  std::swap(broken["classes"][2][0][0], broken["classes"][2][1][0]);
  const auto bad = dir.write("bad.json", broken.dump());
  const auto invalid = run_json("net validate " + quoted(bad), 1);
  CHECK(invalid["verdict"] == "FAIL");

  const auto junk = dir.write("junk.json", "{not json");
  CHECK(run("net validate " + quoted(junk)).status == 2);
}

TEST_CASE("bruck-ryser command") {
  const auto six = run_json("bruck-ryser 6", 0);
  CHECK(six["excluded"] == true);
  const auto ten = run_json("bruck-ryser 10", 0);
  CHECK(ten["excluded"] == false);
}

TEST_CASE("parallax enumerate command") {
  const auto j = run_json("parallax enumerate", 0);
  CHECK(j["parallaxes"] == nlohmann::json::array({"2222", "2226", "3330", "3332"}));
}
