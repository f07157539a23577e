#include "officers/certificate.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace officers {

std::string to_string(Verdict v) { return v == Verdict::Pass ? "PASS" : "FAIL"; }

Verdict Certificate::verdict() const {
  if (local == Verdict::Fail) return Verdict::Fail;
  const bool children_ok =
      std::all_of(children.begin(), children.end(), [](const Certificate& c) { return c.passed(); });
  return children_ok ? Verdict::Pass : Verdict::Fail;
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

std::string Certificate::inputs_digest() const { return "sha256:" + sha256_hex(inputs.dump()); }

Verdict ProofReport::verdict() const {
  const bool ok = std::all_of(steps.begin(), steps.end(), [](const Certificate& c) { return c.passed(); });
  return ok ? Verdict::Pass : Verdict::Fail;
}

std::optional<std::string> ProofReport::first_failure() const {
  for (const auto& s : steps) {
    if (!s.passed()) return s.id;
  }
  return std::nullopt;
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j = {
      {"id", c.id},
      {"claim", c.claim},
      {"inputs_digest", c.inputs_digest()},
      {"verdict", to_string(c.verdict())},
      {"payload", c.payload},
  };
  if (!c.display.empty()) j["display"] = c.display;
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& child : c.children) kids.push_back(to_json(child));
  j["children"] = std::move(kids);
  return j;
}

nlohmann::json to_json(const ProofReport& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) steps.push_back(to_json(s));
  nlohmann::json j = {
      {"schema", kReportSchema},
      {"command", r.command},
      {"verdict", to_string(r.verdict())},
      {"steps", std::move(steps)},
      {"notes", r.notes},
  };
  if (r.elapsed_seconds) j["elapsed_seconds"] = *r.elapsed_seconds;
  return j;
}

std::string render_json(const ProofReport& r) { return to_json(r).dump(2) + "\n"; }

namespace {

void render_certificate(std::ostringstream& out, const Certificate& c, int depth) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  out << indent << "[" << to_string(c.verdict()) << "] " << c.id << ": " << c.claim << "\n";
  for (const auto& [key, value] : c.payload.items()) {
    out << indent << "    " << key << " = " << value.dump() << "\n";
  }
  for (const auto& line : c.display) out << indent << "    | " << line << "\n";
  for (const auto& child : c.children) render_certificate(out, child, depth + 1);
}

}  // namespace

std::string render_text(const ProofReport& r) {
  std::ostringstream out;
  out << r.command << "\n";
  for (const auto& s : r.steps) render_certificate(out, s, 1);
  for (const auto& note : r.notes) {
    out << "  note: " << (note.is_string() ? note.get<std::string>() : note.dump()) << "\n";
  }
  if (r.elapsed_seconds) {
    out << "  elapsed: " << std::fixed << std::setprecision(3) << *r.elapsed_seconds << " s\n";
  }
  out << "verdict: " << to_string(r.verdict()) << "\n";
  return out.str();
}

}  // namespace officers
