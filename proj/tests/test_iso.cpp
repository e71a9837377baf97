#include <doctest.h>

#include "imprim/iso.hpp"

using namespace imprim;

namespace {
// The three classified shapes over their smallest characteristics.
struct CasePair {
  IsoCase kase;
  GroupParams src, dst;
};
CasePair twist3() {
  return {IsoCase::C142, make_params(3, 1, 1, 3, 1, BetaKind::zero()),
          make_params(3, 1, 1, 3, 1, BetaKind::monomial(0, 1))};
}
CasePair split3() {
  return {IsoCase::C141, make_params(3, 1, 1, 1, 3, BetaKind::zero()),
          make_params(3, 1, 1, 1, 3, BetaKind::monomial(0, 1))};
}
CasePair square2() {
  return {IsoCase::C143, make_params(2, 1, 1, 1, 1, BetaKind::zero()),
          make_params(2, 1, 1, 1, 1, BetaKind::monomial(0, 0), true)};
}
}  // namespace

TEST_CASE("twist map coordinates") {
  auto cp = twist3();
  const FieldCtx& f3 = shared_field(3, 1);
  auto d = make_case_descriptor(cp.kase, cp.src, cp.dst, f3.one(), f3.one());
  // (u1,u2,u3,a) -> (u1, u2-u3, u3, a) at b2 = b3 = 1
  GroupElement g{{f3.one(), f3.one(), f3.one()}, f3.from_int(2)};
  auto img = iso_map(d, g);
  CHECK(img.u[0] == f3.one());
  CHECK(img.u[1] == f3.zero());
  CHECK(img.u[2] == f3.one());
  CHECK(img.a == f3.from_int(2));
  CHECK(d.d1.is_zero());
  CHECK(d.d2 == f3.from_int(2));
}

TEST_CASE("all three case maps verify over their base fields") {
  for (const auto& cp : {twist3(), split3(), square2()}) {
    const FieldCtx& base = shared_field(cp.src.characteristic(), 1);
    auto d = make_case_descriptor(cp.kase, cp.src, cp.dst, base.one(), base.one());
    auto res = check_iso(d, base);
    CAPTURE(iso_case_name(cp.kase));
    CHECK(res.status == CheckStatus::Pass);
  }
}

TEST_CASE("shape mismatches are rejected") {
  auto cp = twist3();
  const FieldCtx& f3 = shared_field(3, 1);
  CHECK_THROWS_AS(make_case_descriptor(IsoCase::C141, cp.src, cp.dst, f3.one(), f3.one()), Error);
  CHECK_THROWS_AS(make_case_descriptor(IsoCase::C143, cp.src, cp.dst, f3.one(), f3.one()), Error);
  CHECK_THROWS_AS(make_case_descriptor(cp.kase, cp.dst, cp.src, f3.one(), f3.one()), Error);
  CHECK_THROWS_AS(make_case_descriptor(cp.kase, cp.src, cp.dst, f3.zero(), f3.one()), Error);
}

TEST_CASE("corrupted coefficient fails with a witness") {
  auto cp = twist3();
  const FieldCtx& f3 = shared_field(3, 1);
  auto d = make_case_descriptor(cp.kase, cp.src, cp.dst, f3.one(), f3.one());
  d.d2 = -d.d2;
  auto res = check_iso(d, f3);
  CHECK(res.status == CheckStatus::Fail);
  CHECK(!res.witness.is_null());
}

TEST_CASE("inverse descriptor composes to the identity") {
  auto cp = twist3();
  const FieldCtx& f9 = shared_field(3, 2);
  auto b2 = f9.from_index(4), b3 = f9.from_index(7);
  auto d = make_case_descriptor(cp.kase, cp.src, cp.dst, b2, b3);
  IsoDescriptor inv;
  inv.kase = IsoCase::Custom;
  inv.src = cp.dst;
  inv.dst = cp.src;
  inv.b2 = b2.inv();
  inv.b3 = b3.inv();
  inv.b1 = d.b1.inv();
  inv.d1 = -(d.b1.inv() * d.d1 * b3.pow(-d.deg1));
  inv.d2 = -(b2.inv() * d.d2 * b3.pow(-d.deg2));
  inv.deg1 = d.deg1;
  inv.deg2 = d.deg2;
  for (long long i = 0; i < 9; ++i)
    for (long long j = 0; j < 9; ++j)
      for (long long k = 1; k < 9; ++k) {
        GroupElement g{{f9.from_index(i), f9.from_index(j), f9.from_index((i * j + k) % 9)},
                       f9.from_index(k)};
        auto back = iso_map(inv, iso_map(d, g));
        CHECK(back.u == g.u);
        CHECK(back.a == g.a);
      }
}

TEST_CASE("search finds the identity, reproduces the twist map, respects gates") {
  const FieldCtx& f3 = shared_field(3, 1);
  const FieldCtx& f9 = shared_field(3, 2);
  auto base = make_params(3, 2, 1, 1, 1, BetaKind::zero());
  auto id = search_iso(base, base, f3);
  REQUIRE(id.has_value());
  CHECK(id->b2 == f3.one());
  CHECK(id->b3 == f3.one());
  CHECK(id->d1.is_zero());
  CHECK(id->d2.is_zero());

  auto cp = twist3();
  auto found = search_iso(cp.src, cp.dst, f9);
  REQUIRE(found.has_value());
  CHECK(check_iso(*found, f9).status == CheckStatus::Pass);

  // distinct p-power pairs (h2,h3) stay separate over F_9
  auto other = make_params(3, 1, 1, 1, 3, BetaKind::zero());
  CHECK(!search_iso(other, cp.dst, f9).has_value());
  // e3 gate fires immediately
  auto e3big = make_params(3, 2, 3, 1, 1, BetaKind::zero());
  CHECK(!search_iso(base, e3big, f9).has_value());
}
