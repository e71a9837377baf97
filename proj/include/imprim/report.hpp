#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "imprim/params.hpp"

namespace imprim {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::map<std::string, long long> counts;
  nlohmann::json witness;  // null unless a counterexample was found

  bool passed() const { return status != CheckStatus::Fail; }
  void record_failure(nlohmann::json w) {
    status = CheckStatus::Fail;
    if (witness.is_null()) witness = std::move(w);
  }
  nlohmann::json to_json() const;
};

struct VerificationReport {
  nlohmann::json params_echo;
  nlohmann::json field;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  nlohmann::json to_json() const;
};

nlohmann::json params_to_json(const GroupParams& gp);
nlohmann::json field_to_json(const FieldCtx& ctx);

}  // namespace imprim
