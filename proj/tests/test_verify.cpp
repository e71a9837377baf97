#include <doctest.h>

#include <algorithm>

#include "imprim/verify.hpp"

using namespace imprim;

namespace {
const CheckResult* find_check(const std::vector<CheckResult>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.name == name) return &c;
  return nullptr;
}
int count_failed(const std::vector<CheckResult>& cs) {
  return (int)std::count_if(cs.begin(), cs.end(), [](const CheckResult& c) { return !c.passed(); });
}
}  // namespace

TEST_CASE("enumeration") {
  auto gp = make_params(3, 2, 1, 1, 1, BetaKind::zero());
  GroupLaw law(gp, gp.field);
  CHECK(enumerate_group(law).size() == 54);
  auto gp0 = make_params(0, 2, 1, 1, 1, BetaKind::zero());
  GroupLaw law0(gp0, gp0.field);
  CHECK_THROWS_AS(enumerate_group(law0), Error);
}

TEST_CASE("all suites pass across kinds and fields") {
  struct Row {
    GroupParams gp;
    long long p;
    int k;
  };
  std::vector<Row> rows = {
      {make_params(3, 2, 1, 1, 1, BetaKind::zero()), 3, 1},
      {make_params(3, 2, 1, 1, 1, BetaKind::zero()), 3, 2},
      {make_params(3, 2, 1, 1, 1, BetaKind::witt(0)), 3, 1},
      {make_params(3, 1, 1, 3, 1, BetaKind::monomial(0, 1)), 3, 2},
      {make_params(3, 4, 1, 1, 1, BetaKind::ncm(0, 0, 0, 1)), 3, 2},
      {make_params(2, 1, 1, 1, 1, BetaKind::zero()), 2, 2},
      {make_params(2, 1, 1, 1, 1, BetaKind::monomial(0, 0), true), 2, 2},
      {make_params(5, 4, 1, 1, 1, BetaKind::witt(0)), 5, 1},
  };
  for (const auto& row : rows) {
    auto rep = verify_suite(row.gp, shared_field(row.p, row.k), {"all"});
    CAPTURE(row.gp.label());
    CHECK(rep.all_passed());
    CHECK(rep.checks.size() >= 20);
  }
}

TEST_CASE("in-block two-transitivity is gated on gcd(e1, q-1)") {
  // e1 = 4, q = 9: gcd = 4 -> sub-check skipped, multiplier order (q-1)/4 = 2
  auto gp = make_params(3, 1, 1, 3, 1, BetaKind::monomial(0, 1));
  auto rep = verify_suite(gp, shared_field(3, 2), {"inblock"});
  bool skipped = false;
  for (const auto& c : rep.checks) skipped = skipped || c.status == CheckStatus::Skipped;
  CHECK(skipped);
  CHECK(rep.all_passed());
  // e1 = 3, q = 3: gcd = 1 -> everything asserted
  auto base = make_params(3, 2, 1, 1, 1, BetaKind::zero());
  auto rep2 = verify_suite(base, shared_field(3, 1), {"inblock"});
  for (const auto& c : rep2.checks) CHECK(c.status == CheckStatus::Pass);
}

TEST_CASE("negative control: dropping the torus kills pair-transitivity") {
  auto gp = make_params(3, 2, 1, 1, 1, BetaKind::zero());
  FieldTable F(gp.field);
  SmallGroup G(gp, F);
  auto good = check_lambda_sharp(G, false);
  CHECK(count_failed(good) == 0);
  auto bad = check_lambda_sharp(G, true);
  CHECK(count_failed(bad) >= 1);
  const auto* t = find_check(bad, "lambda-sharp-transitivity");
  REQUIRE(t != nullptr);
  CHECK(!t->passed());
  CHECK(!t->witness.is_null());
}

TEST_CASE("negative control: degenerate permutation sets are not sharply 2-transitive") {
  // six copies of the identity on 3 symbols
  std::vector<std::vector<int>> perms(6, {0, 1, 2});
  auto res = check_sharply_2transitive(perms, 3, "degenerate");
  CHECK(!res.passed());
  // the full induced block group is
  auto gp = make_params(3, 2, 1, 1, 1, BetaKind::zero());
  FieldTable F(gp.field);
  SmallGroup G(gp, F);
  std::vector<std::vector<int>> bp;
  for (long long i = 0; i < G.size(); ++i) {
    auto p = G.block_perm(G.element(i));
    if (std::find(bp.begin(), bp.end(), p) == bp.end()) bp.push_back(p);
  }
  CHECK(bp.size() == 6);
  CHECK(check_sharply_2transitive(bp, 3, "blocks").passed());
}

TEST_CASE("structure checks see the noncommutative witness only on big enough fields") {
  auto gp = make_params(3, 4, 1, 1, 1, BetaKind::ncm(0, 0, 0, 1));
  FieldTable F3(shared_field(3, 1));
  auto small = check_structure(SmallGroup(gp, F3));
  const auto* w3 = find_check(small, "quotient-noncommutative-witness");
  REQUIRE(w3 != nullptr);
  CHECK(w3->status == CheckStatus::Skipped);
  FieldTable F9(shared_field(3, 2));
  auto big = check_structure(SmallGroup(gp, F9));
  const auto* w9 = find_check(big, "quotient-noncommutative-witness");
  REQUIRE(w9 != nullptr);
  CHECK(w9->status == CheckStatus::Pass);
  CHECK(!w9->witness.is_null());
}
