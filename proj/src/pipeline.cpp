#include "officers/pipeline.hpp"

#include <chrono>

#include "officers/affine.hpp"
#include "officers/case2222.hpp"
#include "officers/designs.hpp"
#include "officers/gf2.hpp"
#include "officers/netcode.hpp"

namespace officers {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// A (4, 4) net from two orthogonal squares of order 4.
Net small_even_net() {
  auto classes = ag2(4).net().classes();
  classes.resize(4);
  const auto squares = squares_from_net(validate_net(4, std::move(classes)));
  return net_from_mols(squares);
}

// Gram matrix of one line per class in a hypothetical (n, 4) net: a line
// meets itself in n points and each other class's line once.
GF2Matrix hypothetical_gram(int n) {
  GF2Matrix gram(4);
  for (int i = 0; i < 4; ++i) {
    std::string row;
    for (int j = 0; j < 4; ++j) row += i == j ? (n % 2 ? '1' : '0') : '1';
    gram.append(GF2Vector::from_string(row));
  }
  return gram;
}

Certificate lemma_step() {
  Certificate c;
  c.id = "officers.lemma";
  c.claim = "a (6, 4) net has a code of dimension at most 20";
  c.inputs = {{"n", kOfficersOrder}, {"k", 4}};
  const GF2Matrix gram = hypothetical_gram(kOfficersOrder);
  const std::size_t gram_rank = rank(gram);
  const int bound = lemma_bound(kOfficersOrder);
  nlohmann::json gram_rows = nlohmann::json::array();
  for (const auto& row : gram.rows()) gram_rows.push_back(row.to_string());
  c.payload = {{"gram", gram_rows}, {"gram_rank", gram_rank}, {"bound", bound}};
  c.require(gram_rank == 4 && bound == 20);

  Certificate check;
  check.id = "officers.lemma.small_net";
  check.claim = "on a real (4, 4) net the code exceeds its hull by 4 and stays within (16 + 4) / 2";
  const Net net = small_even_net();
  const NetCode code = build_code(net);
  std::vector<LineId> reps;
  for (int cls = 0; cls < 4; ++cls) reps.push_back({cls, 0});
  const std::size_t small_rank = rank(class_gram(net, reps));
  check.inputs = {{"net", code_report(net)}};
  check.payload = code_report(net);
  check.payload["class_gram_rank"] = small_rank;
  check.require(code.code_dim == code.hull_dim + 4 && static_cast<int>(code.code_dim) <= lemma_bound(4) &&
                small_rank == 4);
  c.add(std::move(check));
  return c;
}

Certificate dependency_step() {
  Certificate c;
  c.id = "officers.dependencies";
  c.claim = "the class relations alone would leave dimension 21, so a (6, 4) net needs another relation";
  const int lines = 4 * kOfficersOrder;
  const int class_relations = 4 - 1;
  const int bound = lemma_bound(kOfficersOrder);
  const int dim_if_only_class_relations = lines - class_relations;
  c.inputs = {{"lines", lines}, {"class_relations", class_relations}, {"bound", bound}};
  c.payload = {{"dimension_with_class_relations_only", dim_if_only_class_relations},
               {"bound", bound},
               {"extra_relations_needed", dim_if_only_class_relations - bound},
               {"consequence", "some line set with a nontrivial parallax sums to zero"}};
  c.require(dim_if_only_class_relations > bound);

  Certificate check;
  check.id = "officers.dependencies.small_net";
  check.claim = "the class relations hold on a real (4, 4) net";
  const Net net = small_even_net();
  const auto deps = class_dependencies(net);
  const NetCode code = build_code(net);
  check.payload = {{"class_relations", deps.size()}, {"dependency_count", code.dependency_count()}};
  check.require(deps.size() == 3 && code.dependency_count() >= deps.size());
  c.add(std::move(check));
  return c;
}

nlohmann::json parallax_names(const std::vector<Parallax>& list) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : list) out.push_back(p.to_string());
  return out;
}

Certificate enumeration_step() {
  Certificate c;
  c.id = "officers.parallax_enumeration";
  c.claim = "a zero sum has normalized parallax 2222, 2226, 3330 or 3332";
  c.inputs = {{"n", kOfficersOrder}, {"box", "0..6 per class"}};
  const auto filtered = enumerate_zero_parallaxes(EnumerationOrder::FilterThenSolve);
  const auto solved = enumerate_zero_parallaxes(EnumerationOrder::SolveThenFilter);
  const std::vector<Parallax> expected{Parallax::parse("2222"), Parallax::parse("2226"), Parallax::parse("3330"),
                                       Parallax::parse("3332")};
  const NormalizationAudit audit = audit_normalization();
  std::vector<Parallax> closed(audit.orbit_closed_normal_forms.begin(), audit.orbit_closed_normal_forms.end());
  c.payload = {{"parallaxes", parallax_names(filtered)},
               {"orders_agree", filtered == solved},
               {"normalization",
                {{"box_size", audit.box_size},
                 {"every_orbit_normalizable", audit.every_orbit_normalizable},
                 {"orbit_closed_tuples", audit.orbit_closed},
                 {"orbit_closed_normal_forms", parallax_names(closed)},
                 {"covered_by_candidates", audit.candidates_cover_orbit_closed}}}};
  c.require(filtered == expected && filtered == solved && audit.every_orbit_normalizable &&
            audit.candidates_cover_orbit_closed);
  return c;
}

Certificate exclusion_step(const ArithmeticFault& fault) {
  Certificate c;
  c.id = "officers.exclusions";
  c.claim = "2226, 3330 and 3332 admit no zero sum";
  for (const char* name : {"2226", "3330", "3332"}) c.add(exclusion_certificate(Parallax::parse(name), fault));
  return c;
}

Certificate report_as_step(const ProofReport& r, const std::string& id, const std::string& claim) {
  Certificate c;
  c.id = id;
  c.claim = claim;
  c.children = r.steps;
  if (!r.notes.empty()) c.payload["notes"] = r.notes;
  return c;
}

}  // namespace

ProofReport verify_officers(const VerifyOptions& options) {
  const auto start = Clock::now();
  ProofReport r;
  r.command = "verify officers";
  r.steps.push_back(lemma_step());
  r.steps.push_back(dependency_step());
  r.steps.push_back(enumeration_step());
  r.steps.push_back(exclusion_step(options.fault));
  r.steps.push_back(case2222_certificate());
  r.elapsed_seconds = seconds_since(start);
  return r;
}

ProofReport verify_affine() {
  const auto start = Clock::now();
  ProofReport r;
  r.command = "verify affine";
  r.steps.push_back(ll_ur_balance_check());
  r.steps.push_back(parallel_distribution_check());
  r.steps.push_back(collinear_triple_check());
  r.steps.push_back(triangle_side_check());
  r.steps.push_back(propagate_parallelogram_rule());
  r.steps.push_back(net_implication_certificate());
  const BruckRyser br = bruck_ryser(kOfficersOrder);
  r.notes.push_back("Bruck-Ryser: order 6 is " + std::string(br.excluded ? "" : "not ") + "excluded (6 mod 4 = " +
                    std::to_string(br.residue) + (br.squares ? ", a sum of two squares)" : ", not a sum of two squares)"));
  r.notes.push_back(
      "With parallel parallelogram diagonals, a projective plane of order 6 would have collinear diagonal points "
      "in every quadrangle; by Gleason's theorem it would then be Desarguesian, of prime-power order. Not computed "
      "here.");
  r.elapsed_seconds = seconds_since(start);
  return r;
}

OracleOptions default_oracle_options(int order) {
  OracleOptions o;
  o.stop_at_first = order == 7;
  return o;
}

OracleRun run_oracle(int order, const OracleOptions& options) {
  const auto start = Clock::now();
  OracleRun run;
  run.result = officers_oracle(order, options);
  const OracleResult& res = run.result;

  Certificate c;
  c.id = "oracle.order_" + std::to_string(order);
  c.inputs = {{"order", order}, {"exhaustive", res.exhaustive}};
  c.payload = {{"order", order},
               {"exhaustive", res.exhaustive},
               {"squares_checked", res.squares_checked},
               {"mates_found", res.mates_found}};
  c.payload["reduced_count"] = res.exhaustive ? nlohmann::json(res.squares_checked) : nlohmann::json(nullptr);

  bool defects_empty = true;
  nlohmann::json mates = nlohmann::json::array();
  for (const auto& m : res.mates) {
    const bool empty = orthogonality_defect(make_graeco_pair(m.square, m.mate)).empty();
    defects_empty = defects_empty && empty;
    mates.push_back({{"index", m.index}, {"square", m.square.rows()}, {"mate", m.mate.rows()}, {"defect_empty", empty}});
  }
  c.payload["mates"] = mates;

  if (order == kOfficersOrder) {
    c.claim = "no reduced square of order 6 has an orthogonal mate";
    c.require(res.exhaustive && res.squares_checked == 9408 && res.mates_found == 0);
  } else if (order == 2) {
    c.claim = "no square of order 2 has an orthogonal mate";
    c.require(res.exhaustive && res.mates_found == 0);
  } else {
    c.claim = "some square of order " + std::to_string(order) + " has an orthogonal mate";
    c.require(res.mates_found >= 1 && !res.mates.empty() && defects_empty);
  }

  run.report.command = "oracle --order " + std::to_string(order);
  run.report.steps.push_back(std::move(c));
  if (!res.exhaustive) run.report.notes.push_back("stopped at the first square with a mate");
  run.report.elapsed_seconds = seconds_since(start);
  return run;
}

ProofReport verify_all(const VerifyOptions& options, const OracleOptions& oracle_options) {
  const auto start = Clock::now();
  ProofReport r;
  r.command = "verify all";
  r.steps.push_back(report_as_step(verify_officers(options), "officers", "there is no (6, 4) net"));
  r.steps.push_back(report_as_step(verify_affine(), "affine", "there is no affine plane of order 6"));
  r.steps.push_back(report_as_step(run_oracle(kOfficersOrder, oracle_options).report, "oracle",
                                   "exhaustive search finds no orthogonal pair of order 6"));
  r.elapsed_seconds = seconds_since(start);
  return r;
}

}  // namespace officers
