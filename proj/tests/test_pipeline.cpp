#include <doctest.h>

#include <string>
#include <vector>

#include "officers/errors.hpp"
#include "officers/pipeline.hpp"

using namespace officers;

namespace {

std::vector<std::string> step_ids(const ProofReport& r) {
  std::vector<std::string> ids;
  for (const auto& s : r.steps) ids.push_back(s.id);
  return ids;
}

std::string without_timing(ProofReport r) {
  r.elapsed_seconds.reset();
  return render_json(r);
}

// Step ids and verdicts as they appear in the text rendering.
std::vector<std::string> text_step_lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while ((pos = text.find("\n  [", pos)) != std::string::npos) {
    const auto end = text.find(':', pos);
    out.push_back(text.substr(pos + 3, end - pos - 3));
    ++pos;
  }
  return out;
}

}  // namespace

TEST_CASE("verify officers passes in five steps") {
  const auto r = verify_officers();
  CHECK(r.passed());
  CHECK(step_ids(r) == std::vector<std::string>{"officers.lemma", "officers.dependencies",
                                                "officers.parallax_enumeration", "officers.exclusions",
                                                "case2222"});
  CHECK_FALSE(r.first_failure());
}

TEST_CASE("an arithmetic fault fails the exclusion step") {
  VerifyOptions options;
  options.fault.weight_base_offset = 1;
  const auto r = verify_officers(options);
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_failure());
  CHECK(*r.first_failure() == "officers.exclusions");
  CHECK(r.steps[0].passed());
  CHECK(r.steps[1].passed());
  CHECK(r.steps[2].passed());
  CHECK_FALSE(r.steps[3].passed());
}

TEST_CASE("verify affine passes in six steps") {
  const auto r = verify_affine();
  CHECK(r.passed());
  CHECK(r.steps.size() == 6);
  CHECK(r.steps.back().id == "affine.net_implication");
  CHECK(r.notes.size() == 2);
}

TEST_CASE("text and json agree") {
  for (const auto& r : {verify_officers(), verify_affine()}) {
    const auto j = to_json(r);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["verdict"] == "PASS");
    std::vector<std::string> from_json;
    for (const auto& s : j["steps"]) from_json.push_back("[" + s["verdict"].get<std::string>() + "] " + s["id"].get<std::string>());
    CHECK(text_step_lines(render_text(r)) == from_json);
    CHECK(render_text(r).ends_with("verdict: PASS\n"));
  }
}

TEST_CASE("reports are deterministic") {
  CHECK(without_timing(verify_officers()) == without_timing(verify_officers()));
  CHECK(without_timing(verify_affine()) == without_timing(verify_affine()));
}

TEST_CASE("oracle runs") {
  const auto six = run_oracle(6, default_oracle_options(6));
  CHECK(six.report.passed());
  CHECK(six.result.squares_checked == 9408);
  CHECK(six.result.mates_found == 0);
  CHECK(six.report.steps[0].payload["reduced_count"] == 9408);

  for (int n : {2, 3, 4, 5}) CHECK(run_oracle(n, default_oracle_options(n)).report.passed());
  CHECK_THROWS_AS(run_oracle(8, {}), UnsupportedError);
  CHECK(default_oracle_options(7).stop_at_first);
  CHECK_FALSE(default_oracle_options(6).stop_at_first);

  auto many = default_oracle_options(6);
  many.jobs = 4;
  CHECK(without_timing(run_oracle(6, many).report) == without_timing(six.report));

  auto five = default_oracle_options(5);
  const auto one = run_oracle(5, five);
  five.jobs = 3;
  CHECK(without_timing(run_oracle(5, five).report) == without_timing(one.report));
}

TEST_CASE("early stop is reported") {
  OracleOptions o;
  o.stop_at_first = true;
  const auto run = run_oracle(5, o);
  CHECK(run.report.passed());
  CHECK_FALSE(run.result.exhaustive);
  CHECK(run.report.steps[0].payload["reduced_count"].is_null());
  CHECK(run.report.notes.size() == 1);
}
