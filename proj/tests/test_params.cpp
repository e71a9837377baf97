#include <doctest.h>

#include <functional>

#include "imprim/params.hpp"

using namespace imprim;

namespace {
Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}
}  // namespace

TEST_CASE("baseline validation derives e1") {
  auto gp = make_params(3, 2, 1, 1, 1, BetaKind::zero());
  CHECK(gp.e1 == 3);
  CHECK(gp.label() == "p=3 e=(3,2,1) h=(1,1) beta=zero");
  auto gp0 = make_params(0, 2, 1, 1, 1, BetaKind::zero());
  CHECK(gp0.e1 == 3);
  auto neg = make_params(0, -1, 1, 1, 1, BetaKind::zero());
  CHECK(neg.e1 == 0);
}

TEST_CASE("noncommutative kinds force the tuple") {
  RawParams raw;
  raw.field = FieldCtx::make(3, 1);
  raw.e3 = 1;
  raw.beta = BetaKind::ncm(0, 0, 0, 1);
  auto gp = params_validate(raw);
  CHECK(gp.e2 == 4);
  CHECK(gp.e1 == 5);
  CHECK(gp.h2 == 1);
  CHECK(gp.h3 == 1);
  raw.beta = BetaKind::ncn(0, 1, 0, 1);
  auto gp2 = params_validate(raw);
  CHECK(gp2.h3 == 3);
  CHECK(gp2.e1 == 7);
  CHECK(gp2.e1 == gp2.e3 * beta_degree(3, gp2.beta));
}

TEST_CASE("derived e2 for commutative nonzero cocycles") {
  // witt(0), p=3: deg beta = 3, h2 = h3 = 1 -> e2 = 2
  RawParams raw;
  raw.field = FieldCtx::make(3, 1);
  raw.e3 = 1;
  raw.beta = BetaKind::witt(0);
  CHECK(params_validate(raw).e2 == 2);
  raw.h3 = 3;
  // e3*(deg - h3) = 0 -> rejected
  CHECK(code_of([&] { params_validate(raw); }) == Errc::BadE1Consistency);
}

TEST_CASE("validation error codes") {
  auto mk = [](long long p, long long e2, long long e3, long long h2, long long h3, BetaKind b,
               bool allow = false) {
    return code_of([=] { make_params(p, e2, e3, h2, h3, b, allow); });
  };
  CHECK(mk(3, 2, 2, 1, 1, BetaKind::zero()) == Errc::BadE3);
  CHECK(mk(0, 2, 3, 1, 1, BetaKind::zero()) == Errc::BadE3);
  CHECK(mk(3, 2, 1, 2, 1, BetaKind::zero()) == Errc::BadH);
  CHECK(mk(0, 2, 1, 1, 3, BetaKind::zero()) == Errc::BadH);
  CHECK(mk(2, 2, 1, 1, 1, BetaKind::ncm(0, 0, 0, 1)) == Errc::BadCharForBeta);
  CHECK(mk(0, 2, 1, 1, 1, BetaKind::witt(0)) == Errc::BadCharForBeta);
  CHECK(mk(3, 1, 1, 1, 1, BetaKind::monomial(1, 0)) == Errc::BadExponentOrder);
  CHECK(mk(3, 1, 1, 1, 1, BetaKind::monomial(1, 1)) == Errc::BadExponentOrder);
  CHECK(mk(3, 1, 1, 1, 1, BetaKind::monomial(1, 1), true) == Errc::BadExponentOrder);
  CHECK(mk(3, 1, 1, 1, 1, BetaKind::ncm(0, 0, 1, 1)) == Errc::BadExponentOrder);
  CHECK(mk(3, 5, 1, 1, 1, BetaKind::ncm(0, 0, 0, 1)) == Errc::BadE2NC);
  CHECK(mk(3, 9, 1, 1, 1, BetaKind::witt(0)) == Errc::BadE1Consistency);
  CHECK(mk(3, 1, 1, 1, 1, BetaKind::ncm(0, 1, 0, 1)) == Errc::BadE1Consistency);
  // zero beta needs explicit e2
  RawParams raw;
  raw.field = FieldCtx::make(3, 1);
  CHECK(code_of([&] { params_validate(raw); }) == Errc::BadE1Consistency);
}

TEST_CASE("characteristic 2 relaxation for equal exponents") {
  CHECK_THROWS_AS(make_params(2, 1, 1, 1, 1, BetaKind::monomial(0, 0)), Error);
  auto gp = make_params(2, 1, 1, 1, 1, BetaKind::monomial(0, 0), true);
  CHECK(gp.e1 == 2);
  CHECK(beta_degree(2, gp.beta) == 2);
}

TEST_CASE("cocycle polynomials") {
  auto f3 = FieldCtx::make(3, 1);
  auto witt = make_params(3, 2, 1, 1, 1, BetaKind::witt(0));
  CHECK(beta_poly(witt).to_string() == "x3*y3^2 + x3^2*y3");
  auto ncm = make_params(3, 4, 1, 1, 1, BetaKind::ncm(0, 0, 0, 1));
  CHECK(beta_poly(ncm).to_string() == "2*x3^2*y3^3");
  CHECK(psi2_poly(ncm).to_string() == "x3*y3^3");
  CHECK(psi2_poly(witt).is_zero());
  auto zero = make_params(3, 2, 1, 1, 1, BetaKind::zero());
  CHECK(psi1_poly(zero).to_string() == "x3*y2");
  auto mono = make_params(3, 1, 1, 1, 3, BetaKind::monomial(0, 1));
  CHECK(psi1_poly(mono).to_string() == "x3*y3^3 + x3^3*y2");
  CHECK(beta_degree(3, mono.beta) == 4);
  CHECK(beta_degree(3, BetaKind::witt(1)) == 9);
  (void)f3;
}

TEST_CASE("beta tag names round-trip") {
  for (BetaTag t : {BetaTag::Zero, BetaTag::Witt, BetaTag::Monomial, BetaTag::NCm, BetaTag::NCn})
    CHECK(beta_tag_parse(beta_tag_name(t)) == t);
  CHECK(!beta_tag_parse("nope"));
}
