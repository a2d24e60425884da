#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twd/graph.hpp"

namespace twd {

/// First failed condition of a verifier, with the vertices (or nodes) that
/// witness it.
struct Violation {
  std::string condition;
  std::vector<int> witness;
};

/// Outcome of a structural check: Ok, or the first Violation found.
struct CheckResult {
  std::optional<Violation> violation;

  bool ok() const noexcept { return !violation.has_value(); }
  explicit operator bool() const noexcept { return ok(); }

  static CheckResult Ok() { return {}; }
  static CheckResult Fail(std::string condition, std::vector<int> witness = {}) {
    return {Violation{std::move(condition), std::move(witness)}};
  }
};

}  // namespace twd
