// officers: command-line verifier for the (6, 4) net and order-6 plane
// nonexistence proofs.
//
// Exit status: 0 PASS, 1 verification FAIL, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "officers/affine.hpp"
#include "officers/certificate.hpp"
#include "officers/designs.hpp"
#include "officers/designs_io.hpp"
#include "officers/errors.hpp"
#include "officers/netcode.hpp"
#include "officers/parallax.hpp"
#include "officers/pipeline.hpp"

namespace {

using namespace officers;
using nlohmann::json;

enum class Format { Text, Json };

struct Globals {
  Format format = Format::Text;
  bool quiet = false;
  int weight_fault = 0;
};

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit_report(const Globals& g, const ProofReport& r) {
  std::cout << (g.format == Format::Json ? render_json(r) : render_text(r));
  return r.passed() ? kExitPass : kExitFail;
}

// Result of a single-object command: JSON as is, or "key: value" lines.
int emit_result(const Globals& g, json body, bool passed, const std::vector<std::string>& text) {
  body["verdict"] = passed ? "PASS" : "FAIL";
  if (g.format == Format::Json) {
    json out = {{"schema", kReportSchema}};
    out.update(body);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& line : text) std::cout << line << "\n";
    std::cout << "verdict: " << (passed ? "PASS" : "FAIL") << "\n";
  }
  return passed ? kExitPass : kExitFail;
}

int emit_validation_failure(const Globals& g, const std::string& command, const ValidationError& e) {
  return emit_result(g, {{"command", command}, {"kind", e.kind()}, {"detail", e.detail()}, {"message", e.what()}},
                     false, {command, "invalid: " + std::string(e.what()) + " [" + e.kind() + "]"});
}

std::string pair_label(const LabeledPair& p, const SymbolPair& s) {
  return p.latin_labels.at(static_cast<std::size_t>(s.latin)) + p.greek_labels.at(static_cast<std::size_t>(s.greek));
}

int cmd_verify(const Globals& g, const std::string& target, const OracleOptions& oracle) {
  VerifyOptions options;
  options.fault.weight_base_offset = g.weight_fault;
  if (target == "officers") return emit_report(g, verify_officers(options));
  if (target == "affine") return emit_report(g, verify_affine());
  return emit_report(g, verify_all(options, oracle));
}

int cmd_oracle(const Globals& g, int order, OracleOptions options, const std::string& dump_path) {
  OracleRun run = run_oracle(order, options);
  if (!dump_path.empty()) {
    if (run.result.mates.empty()) {
      if (!g.quiet) std::cerr << "no mate found; " << dump_path << " not written\n";
    } else {
      std::ofstream out(dump_path);
      if (!out) throw InputError("cannot write " + dump_path);
      const auto& m = run.result.mates.front();
      out << "# reduced square " << m.index << " of order " << order << " with an orthogonal mate\n";
      out << format_pair(make_graeco_pair(m.square, m.mate));
    }
  }
  return emit_report(g, run.report);
}

int cmd_parallax_enumerate(const Globals& g) {
  const auto start = std::chrono::steady_clock::now();
  const auto list = enumerate_zero_parallaxes();
  json names = json::array();
  std::string joined;
  for (const auto& p : list) {
    names.push_back(p.to_string());
    joined += (joined.empty() ? "" : " ") + p.to_string();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return emit_result(g, {{"command", "parallax enumerate"}, {"parallaxes", names}, {"elapsed_seconds", elapsed}},
                     true, {"parallaxes: " + joined});
}

int cmd_latin_validate(const Globals& g, const std::string& file) {
  try {
    const auto s = load_latin_file(file);
    json labels = s.labels;
    return emit_result(g, {{"command", "latin validate"}, {"order", s.square.order()}, {"labels", labels}}, true,
                       {"latin square of order " + std::to_string(s.square.order())});
  } catch (const ValidationError& e) {
    return emit_validation_failure(g, "latin validate", e);
  }
}

int cmd_pair_defect(const Globals& g, const std::string& file) {
  std::optional<LabeledPair> loaded;
  try {
    loaded = load_pair_file(file);
  } catch (const ValidationError& e) {
    return emit_validation_failure(g, "pair defect", e);
  }
  const LabeledPair& p = *loaded;
  const auto defect = orthogonality_defect(p.pair);
  json duplicated = json::array();
  json missing = json::array();
  std::vector<std::string> text{"order " + std::to_string(p.pair.latin.order())};
  for (const auto& d : defect.duplicated) {
    duplicated.push_back({{"pair", pair_label(p, d.pair)}, {"count", d.count}});
    text.push_back("duplicated " + pair_label(p, d.pair) + " x" + std::to_string(d.count));
  }
  for (const auto& m : defect.missing) {
    missing.push_back(pair_label(p, m));
    text.push_back("missing " + pair_label(p, m));
  }
  if (defect.empty()) text.push_back("orthogonal");
  return emit_result(g,
                     {{"command", "pair defect"},
                      {"order", p.pair.latin.order()},
                      {"orthogonal", defect.empty()},
                      {"duplicated", duplicated},
                      {"missing", missing}},
                     defect.empty(), text);
}

int cmd_net_validate(const Globals& g, const std::string& file) {
  try {
    const Net net = load_net_file(file);
    return emit_result(g, {{"command", "net validate"}, {"n", net.order()}, {"k", net.class_count()}}, true,
                       {"(" + std::to_string(net.order()) + ", " + std::to_string(net.class_count()) + ") net"});
  } catch (const ValidationError& e) {
    return emit_validation_failure(g, "net validate", e);
  }
}

int cmd_code_report(const Globals& g, const std::string& file) {
  Net net = [&] {
    try {
      return load_net_file(file);
    } catch (const ValidationError& e) {
      throw InputError(std::string("not a net: ") + e.what());
    }
  }();
  json report = code_report(net);
  std::vector<std::string> text;
  for (const auto& [key, value] : report.items()) text.push_back(key + ": " + value.dump());
  report["command"] = "code report";
  return emit_result(g, report, true, text);
}

int cmd_plane_check(const Globals& g, const std::string& file) {
  try {
    const IncidencePlane plane = validate_plane(load_net_file(file));
    const auto survey = survey_parallelograms(plane);
    json witness = nullptr;
    if (survey.witness) witness = *survey.witness;
    return emit_result(g,
                       {{"command", "plane check"},
                        {"order", plane.order()},
                        {"parallelograms", survey.parallelograms},
                        {"diagonals_parallel", survey.all_parallel()},
                        {"witness", witness}},
                       true,
                       {"affine plane of order " + std::to_string(plane.order()),
                        std::string("diagonals of every parallelogram parallel: ") +
                            (survey.all_parallel() ? "yes" : "no")});
  } catch (const ValidationError& e) {
    return emit_validation_failure(g, "plane check", e);
  }
}

int cmd_bruck_ryser(const Globals& g, int n) {
  const BruckRyser r = bruck_ryser(n);
  json squares = nullptr;
  std::string why;
  if (r.squares) {
    squares = {r.squares->first, r.squares->second};
    why = std::to_string(n) + " = " + std::to_string(r.squares->first) + "^2 + " + std::to_string(r.squares->second) +
          "^2";
  } else {
    why = std::to_string(n) + " is not a sum of two squares";
  }
  const std::string line = std::to_string(n) + (r.excluded ? ": excluded" : ": not excluded") + " (n mod 4 = " +
                           std::to_string(r.residue) + "; " + why + ")";
  return emit_result(g,
                     {{"command", "bruck-ryser"},
                      {"n", n},
                      {"excluded", r.excluded},
                      {"residue_mod_4", r.residue},
                      {"sum_of_two_squares", squares}},
                     true, {line});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Machine-checked proof that no (6, 4) net and no affine plane of order 6 exist"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet", g.quiet, "Suppress progress on standard error");
  app.add_option("--weight-fault", g.weight_fault, "Perturb the weight formula (testing)")->group("");

  int jobs = 1;
  std::string target;
  auto* verify = app.add_subcommand("verify", "Run a proof: officers, affine or all");
  verify->add_option("target", target)->required()->check(CLI::IsMember({"officers", "affine", "all"}));
  verify->add_option("--jobs", jobs, "Worker threads for the order-6 search")->check(CLI::PositiveNumber);

  int order = 6;
  bool exhaustive = false;
  std::size_t keep = 8;
  std::string dump_path;
  auto* oracle = app.add_subcommand("oracle", "Search every reduced square of an order for an orthogonal mate");
  oracle->add_option("--order", order, "Order 2..7")->required();
  oracle->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  oracle->add_option("--dump-mates", dump_path, "Write the first pair found as a pair file");
  oracle->add_option("--keep", keep, "Pairs to list in the report");
  oracle->add_flag("--exhaustive", exhaustive, "Scan all squares of order 7 instead of stopping at the first mate");

  auto* parallax = app.add_subcommand("parallax", "Parallax computations");
  parallax->require_subcommand(1);
  auto* enumerate = parallax->add_subcommand("enumerate", "Parallaxes a zero sum of lines could have");

  std::string file;
  auto* latin = app.add_subcommand("latin", "Latin square files");
  latin->require_subcommand(1);
  latin->add_subcommand("validate", "Check a square file")->add_option("file", file)->required();

  auto* pair = app.add_subcommand("pair", "Graeco-Latin pair files");
  pair->require_subcommand(1);
  pair->add_subcommand("defect", "Duplicated and missing symbol pairs")->add_option("file", file)->required();

  auto* net = app.add_subcommand("net", "Net files");
  net->require_subcommand(1);
  net->add_subcommand("validate", "Check both net axioms")->add_option("file", file)->required();

  auto* code = app.add_subcommand("code", "Binary code of a net");
  code->require_subcommand(1);
  code->add_subcommand("report", "Code and hull dimensions")->add_option("file", file)->required();

  auto* plane = app.add_subcommand("plane", "Affine plane files");
  plane->require_subcommand(1);
  plane->add_subcommand("check", "Check a plane and its parallelogram diagonals")->add_option("file", file)->required();

  int br_n = 0;
  auto* br = app.add_subcommand("bruck-ryser", "Bruck-Ryser test for an order");
  br->add_option("n", br_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }
  g.format = format == "json" ? Format::Json : Format::Text;

  OracleOptions options = default_oracle_options(order);
  options.jobs = jobs;
  options.keep_mates = keep;
  if (exhaustive) options.stop_at_first = false;
  if (!g.quiet) {
    auto last = std::chrono::steady_clock::now();
    options.progress = [last](std::uint64_t checked) mutable {
      const auto now = std::chrono::steady_clock::now();
      if (now - last < std::chrono::seconds(1)) return;
      last = now;
      std::cerr << "checked " << checked << " squares\n";
    };
  }

  try {
    if (verify->parsed()) {
      if (target != "all" && verify->count("--jobs")) throw InputError("--jobs applies to 'verify all' only");
      return cmd_verify(g, target, options);
    }
    if (oracle->parsed()) {
      return cmd_oracle(g, order, options, dump_path);
    }
    if (enumerate->parsed()) return cmd_parallax_enumerate(g);
    if (latin->parsed()) return cmd_latin_validate(g, file);
    if (pair->parsed()) return cmd_pair_defect(g, file);
    if (net->parsed()) return cmd_net_validate(g, file);
    if (code->parsed()) return cmd_code_report(g, file);
    if (plane->parsed()) return cmd_plane_check(g, file);
    if (br->parsed()) return cmd_bruck_ryser(g, br_n);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << " [" << e.kind() << "]\n";
    return kExitUsage;
  }
  return kExitUsage;
}
