#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "transtat/rational.hpp"

namespace transtat {

/// A concrete input on which the two sides of an identity differ, together
/// with the exact difference.  Enough context is stored to replay the
/// evaluation later and reproduce the difference byte for byte.
struct Witness {
  nlohmann::json context;      // structured: check-specific indices, word, ...
  RationalVector input;        // vector the identity was evaluated on
  RationalVector difference;   // (lhs - rhs) applied to input
};

/// Structured pass/fail result of a single mathematical check.
struct CheckReport {
  std::string name;
  bool passed = false;
  bool residual_zero = false;  // exact; equals `passed` for identity checks
  std::optional<Witness> witness;
  std::string details;

  static CheckReport pass(std::string name, std::string details = "") {
    return CheckReport{std::move(name), true, true, std::nullopt, std::move(details)};
  }
  static CheckReport fail(std::string name, Witness w, std::string details = "") {
    return CheckReport{std::move(name), false, false, std::move(w), std::move(details)};
  }
  static CheckReport fail_plain(std::string name, std::string details = "") {
    return CheckReport{std::move(name), false, false, std::nullopt, std::move(details)};
  }
};

}  // namespace transtat
