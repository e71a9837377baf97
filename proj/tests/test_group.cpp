#include <doctest.h>

#include "imprim/group.hpp"

using namespace imprim;

namespace {
GroupParams baseline3() { return make_params(3, 2, 1, 1, 1, BetaKind::zero()); }
}  // namespace

TEST_CASE("unipotent product and inverse") {
  auto gp = baseline3();
  GroupLaw law(gp, gp.field);
  auto one = gp.field.one();
  UnipElem x{one, one, one};
  auto sq = law.unip_mul(x, x);
  CHECK(sq[0] == gp.field.zero());
  CHECK(sq[1] == gp.field.from_int(2));
  CHECK(sq[2] == gp.field.from_int(2));
  auto xi = law.unip_inv(x);
  CHECK(law.unip_mul(x, xi) == law.unip_identity());
  CHECK(law.unip_mul(xi, x) == law.unip_identity());
}

TEST_CASE("torus action and semidirect product") {
  auto gp = baseline3();
  GroupLaw law(gp, gp.field);
  auto a = gp.field.from_int(2);
  UnipElem u{gp.field.one(), gp.field.one(), gp.field.one()};
  auto tu = law.torus_apply(a, u);
  CHECK(tu[0] == a.pow(gp.e1));
  CHECK(tu[1] == a.pow(gp.e2));
  CHECK(tu[2] == a.pow(gp.e3));
  CHECK_THROWS_AS(law.torus_apply(gp.field.zero(), u), Error);

  GroupElement g{u, a};
  auto gi = law.inverse(g);
  auto e = law.mul(g, gi);
  CHECK(e.u == law.unip_identity());
  CHECK(e.a == gp.field.one());
}

TEST_CASE("group law is associative on a sample grid") {
  auto gp = make_params(3, 4, 1, 1, 1, BetaKind::ncm(0, 0, 0, 1));
  GroupLaw law(gp, gp.field);
  std::vector<GroupElement> sample;
  for (long long i = 0; i < 3; ++i)
    for (long long j = 0; j < 3; ++j)
      sample.push_back({{gp.field.from_int(i), gp.field.from_int(j), gp.field.from_int(i + j)},
                        gp.field.from_int(1 + (i + j) % 2)});
  for (const auto& a : sample)
    for (const auto& b : sample)
      for (const auto& c : sample) {
        auto lhs = law.mul(law.mul(a, b), c);
        auto rhs = law.mul(a, law.mul(b, c));
        CHECK(lhs.u == rhs.u);
        CHECK(lhs.a == rhs.a);
      }
}

TEST_CASE("symbolic associator vanishes for classified tuples") {
  for (auto gp : {baseline3(), make_params(3, 2, 1, 1, 1, BetaKind::witt(0)),
                  make_params(3, 1, 1, 1, 3, BetaKind::monomial(0, 1)),
                  make_params(3, 4, 1, 1, 1, BetaKind::ncm(0, 0, 0, 1)),
                  make_params(0, 2, 1, 1, 1, BetaKind::zero())}) {
    auto w = assoc_witness(gp);
    CHECK(w[0].is_zero());
    CHECK(w[1].is_zero());
    CHECK(w[2].is_zero());
  }
}

TEST_CASE("corrupted cocycle breaks associativity symbolically") {
  auto gp = baseline3();
  // psi1 with a non-additive x3 power: y2*x3 + x3^2
  const std::vector<std::string> v1 = {"x3", "y2", "y3"};
  auto psi1 = MultiPoly::monomial(gp.field, v1, {1, 1, 0}, gp.field.one()) +
              MultiPoly::monomial(gp.field, v1, {2, 0, 0}, gp.field.one());
  auto psi2 = MultiPoly::zero(gp.field, {"x3", "y3"});
  auto w = assoc_witness_for(psi1, psi2);
  CHECK(!(w[0].is_zero() && w[1].is_zero() && w[2].is_zero()));
}

TEST_CASE("group law requires matching characteristic") {
  auto gp = baseline3();
  CHECK_THROWS_AS(GroupLaw(gp, FieldCtx::make(5, 1)), Error);
}
