#pragma once

// Certificate records and proof reports.
//
// A certificate is one replayed proof step: what it claims, the inputs it
// was computed from (digested with SHA-256), its local verdict, a payload
// of computed facts, and sub-steps. A step passes only if its own check
// and every child pass.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace officers {

enum class Verdict { Pass, Fail };

std::string to_string(Verdict v);

struct Certificate {
  std::string id;
  std::string claim;
  nlohmann::json inputs = nlohmann::json::object();
  Verdict local = Verdict::Pass;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> display;  // preformatted lines for the text renderer
  std::vector<Certificate> children;

  Verdict verdict() const;
  bool passed() const { return verdict() == Verdict::Pass; }
  std::string inputs_digest() const;

  Certificate& add(Certificate child) {
    children.push_back(std::move(child));
    return children.back();
  }
  // ANDs `ok` into the local verdict.
  void require(bool ok) {
    if (!ok) local = Verdict::Fail;
  }
};

struct ProofReport {
  std::string command;
  std::vector<Certificate> steps;
  nlohmann::json notes = nlohmann::json::array();
  std::optional<double> elapsed_seconds;

  Verdict verdict() const;
  bool passed() const { return verdict() == Verdict::Pass; }
  // Id of the first failing top-level step, if any.
  std::optional<std::string> first_failure() const;
};

inline constexpr int kReportSchema = 1;

std::string sha256_hex(const std::string& data);

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const ProofReport& r);
std::string render_json(const ProofReport& r);
std::string render_text(const ProofReport& r);

}  // namespace officers
