#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bwm/serialize.hpp"

namespace bwm {

/// Verdict labels used in reports. Equal is a proof on the exact backend and
/// evidence on the modular one; BudgetExhausted and ParameterSingular are
/// inconclusive; NotReducedToZero and Error count as failures.
namespace verdict {
inline constexpr const char* kEqual = "Equal";
inline constexpr const char* kNotReduced = "NotReducedToZero";
inline constexpr const char* kBudget = "BudgetExhausted";
inline constexpr const char* kSingular = "ParameterSingular";
inline constexpr const char* kError = "Error";
}  // namespace verdict

struct Check {
  std::string identity;
  int n = 0;
  std::string variant;  ///< empty when the check does not depend on a variant
  std::string verdict;
  std::optional<double> wall_time_ms;
  std::string backend;
  std::string detail;  ///< witness or error text; text output only
};

struct Report {
  std::string suite;
  std::string backend;
  bool certifying = true;  ///< false for modular evidence
  std::vector<Check> checks;

  void sort();
  std::size_t count(const std::string& verdict) const;
  bool failed() const;
  bool inconclusive() const;
  /// "pass" only when every verdict is Equal.
  std::string status() const;
  /// 0 pass, 1 a failure, 2 inconclusive without failures.
  int exit_code() const;
  void append(const Report& other);

  Json to_json() const;
  std::string to_text() const;
};

}  // namespace bwm
