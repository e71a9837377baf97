#include "imprim/report.hpp"

namespace imprim {

namespace {
const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}
}  // namespace

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["status"] = status_name(status);
  j["counts"] = counts;
  j["witness"] = witness;
  return j;
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["params"] = params_echo;
  j["field"] = field;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  return j;
}

nlohmann::json params_to_json(const GroupParams& gp) {
  nlohmann::json j;
  j["char"] = gp.field.characteristic();
  j["e1"] = gp.e1;
  j["e2"] = gp.e2;
  j["e3"] = gp.e3;
  j["h2"] = gp.h2;
  j["h3"] = gp.h3;
  j["beta"] = beta_tag_name(gp.beta.tag);
  switch (gp.beta.tag) {
    case BetaTag::Zero: break;
    case BetaTag::Witt: j["r"] = gp.beta.r; break;
    case BetaTag::Monomial:
      j["r"] = gp.beta.r;
      j["s"] = gp.beta.s;
      break;
    case BetaTag::NCm:
    case BetaTag::NCn:
      j["l2"] = gp.beta.l2;
      j["l3"] = gp.beta.l3;
      j["m"] = gp.beta.m;
      j["n"] = gp.beta.n;
      break;
  }
  if (gp.allow_equal_exponents) j["allow_equal_exponents"] = true;
  return j;
}

nlohmann::json field_to_json(const FieldCtx& ctx) {
  nlohmann::json j;
  j["p"] = ctx.characteristic();
  j["k"] = ctx.extension_degree();
  j["modulus"] = ctx.modulus_string();
  return j;
}

}  // namespace imprim
