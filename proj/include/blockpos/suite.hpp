#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "blockpos/verifier.hpp"

namespace blockpos {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  nlohmann::json measured = nlohmann::json::object();
};

inline constexpr int kCriterionCount = 13;

struct SuiteReport {
  VerifyConfig cfg;
  std::vector<CriterionResult> criteria;

  bool all_passed() const;
  /// Canonical body: config, criteria in id order, overall flag. Contains no
  /// timestamps, so equal inputs give byte-equal dumps.
  nlohmann::json to_json() const;
};

nlohmann::json config_to_json(const VerifyConfig& cfg);

/// Runs one of the criteria 1..12 at the pinned tolerances.
CriterionResult run_criterion(int id, const VerifyConfig& cfg);

/// Criteria 1..12, then 13: a second pass of 1..12 must produce a
/// byte-identical canonical report.
SuiteReport run_theorem_suite(const VerifyConfig& cfg);

}  // namespace blockpos
