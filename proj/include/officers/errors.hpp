#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace officers {

// Malformed input: ragged matrices, out-of-range symbols, unreadable files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the regime an operation is defined for.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A well-formed structure that violates an axiom. `kind` is a stable
// dotted tag ("latin.row", "net.axiom2", ...) and `detail` carries the
// first offending coordinates.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string kind, nlohmann::json detail, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)), detail_(std::move(detail)) {}

  const std::string& kind() const noexcept { return kind_; }
  const nlohmann::json& detail() const noexcept { return detail_; }

 private:
  std::string kind_;
  nlohmann::json detail_;
};

}  // namespace officers
