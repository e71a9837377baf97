#include <doctest.h>

#include "imprim/cocycle.hpp"

using namespace imprim;

TEST_CASE("admissibility of classification targets") {
  // both noncommutative shapes give admissible targets
  auto ncm = make_params(3, 4, 1, 1, 1, BetaKind::ncm(0, 0, 0, 1));
  auto ncn = make_params(3, 4, 1, 1, 3, BetaKind::ncn(0, 1, 0, 1));
  CHECK(admissible_target(classification_target(ncm)));
  CHECK(admissible_target(classification_target(ncn)));
  // exponent mismatch (l3 too large relative to l2) is inadmissible
  CHECK(!admissible_target({9, 1, 3, 3}));
}

TEST_CASE("solver reproduces the noncommutative cocycles") {
  auto ncm = make_params(3, 4, 1, 1, 1, BetaKind::ncm(0, 0, 0, 1));
  auto t = classification_target(ncm);
  CHECK(t.A == 1);
  CHECK(t.B == 1);
  CHECK(t.C == 3);
  auto sol = solve_delta2(t);
  REQUIRE(sol.consistent());
  CHECK(sol.unknowns == 4);
  CHECK(sol.rank == sol.augmented_rank);
  CHECK(delta2(*sol.beta) == target_poly(t, shared_field(3, 1)));
  CHECK(sol.beta->to_string() == "2*x3^2*y3^3");
}

TEST_CASE("characteristic-2 systems are inconsistent") {
  TargetMonomial t{1, 1, 2, 2};
  REQUIRE(admissible_target(t));
  auto sol = solve_delta2(t);
  CHECK(!sol.consistent());
  CHECK(sol.rank_deficit() == 1);
}

TEST_CASE("degree bound truncation loses nothing beyond the homogeneous slice") {
  TargetMonomial t{1, 1, 3, 3};
  auto full = solve_delta2(t);
  auto truncated = solve_delta2(t, 3);  // below the slice degree 5
  CHECK(full.consistent());
  CHECK(!truncated.consistent());
  CHECK(truncated.unknowns == 0);
}

TEST_CASE("coboundary recognition") {
  const FieldCtx& Q = shared_field(0, 1);
  auto kappa = delta1(MultiPoly::monomial(Q, {"T"}, {3}, Q.from_int(2)));
  auto g = is_coboundary(kappa, 5);
  REQUIRE(g.has_value());
  CHECK(delta1(*g) == kappa);
  // asymmetric polynomials are never first differences
  auto bad = MultiPoly::monomial(Q, {"x", "y"}, {2, 1}, Q.one());
  CHECK(!is_coboundary(bad, 8).has_value());
}

TEST_CASE("cocycle identities per kind") {
  CHECK(verify_beta_identity(make_params(3, 2, 1, 1, 1, BetaKind::zero())));
  CHECK(verify_beta_identity(make_params(3, 2, 1, 1, 1, BetaKind::witt(0))));
  CHECK(verify_beta_identity(make_params(5, 4, 1, 1, 1, BetaKind::witt(0))));
  CHECK(verify_beta_identity(make_params(3, 1, 1, 3, 1, BetaKind::monomial(0, 1))));
  CHECK(verify_beta_identity(make_params(3, 4, 1, 1, 1, BetaKind::ncm(0, 0, 0, 1))));
  CHECK(verify_beta_identity(make_params(3, 4, 1, 1, 3, BetaKind::ncn(0, 1, 0, 1))));
  CHECK(verify_beta_identity(make_params(2, 1, 1, 1, 1, BetaKind::monomial(0, 0), true)));
  // classification targets exist only for the noncommutative kinds
  CHECK_THROWS_AS(classification_target(make_params(3, 2, 1, 1, 1, BetaKind::zero())), Error);
}
