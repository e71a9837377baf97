#include <doctest.h>

#include "imprim/field.hpp"

using namespace imprim;

TEST_CASE("prime fields and rationals") {
  auto f5 = FieldCtx::make(5, 1);
  CHECK(f5.order() == 5);
  CHECK(f5.from_int(2).inv() == f5.from_int(3));
  CHECK(f5.from_rational(1, 2) == f5.from_int(3));
  CHECK((f5.from_int(4) + f5.from_int(3)) == f5.from_int(2));
  CHECK((-f5.from_int(2)) == f5.from_int(3));

  auto q = FieldCtx::make(0, 1);
  auto half = q.from_rational(1, 2);
  CHECK((half + half) == q.one());
  CHECK(q.from_rational(2, 4) == half);
  CHECK(half.inv() == q.from_int(2));
  CHECK(q.from_rational(-3, -6) == half);
}

TEST_CASE("modulus selection is the lexicographically first irreducible") {
  CHECK(FieldCtx::make(3, 2).modulus_string() == "T^2 + 1");
  CHECK(FieldCtx::make(2, 2).modulus_string() == "T^2 + T + 1");
  CHECK(FieldCtx::make(3, 2).order() == 9);
  CHECK(FieldCtx::make(2, 2).order() == 4);
  // deterministic: construction twice yields identical contexts
  CHECK(FieldCtx::make(5, 2) == FieldCtx::make(5, 2));
}

TEST_CASE("extension arithmetic") {
  auto f9 = FieldCtx::make(3, 2);
  // T * T = -1 with modulus T^2 + 1
  auto t = f9.from_coeffs({0, 1});
  CHECK((t * t) == -f9.one());
  for (long long i = 0; i < 9; ++i) CHECK(f9.index_of(f9.from_index(i)) == i);
  // every nonzero element has multiplicative order dividing 8
  for (long long i = 1; i < 9; ++i) {
    auto a = f9.from_index(i);
    CHECK(a.pow(8) == f9.one());
    CHECK((a * a.inv()) == f9.one());
    CHECK(a.pow(-1) == a.inv());
  }
  CHECK(f9.zero().pow(0) == f9.one());
  CHECK(f9.zero().pow(5) == f9.zero());
}

TEST_CASE("frobenius is additive in characteristic p") {
  auto f9 = FieldCtx::make(3, 2);
  for (long long i = 0; i < 9; ++i)
    for (long long j = 0; j < 9; ++j) {
      auto a = f9.from_index(i), b = f9.from_index(j);
      CHECK((a + b).pow(3) == a.pow(3) + b.pow(3));
    }
}

TEST_CASE("witt addition coefficients") {
  CHECK(witt_coefficient_int(3, 1) == 1);
  CHECK(witt_coefficient_int(3, 2) == 1);
  CHECK(witt_coefficient_int(5, 2) == 2);
  CHECK(witt_coefficient_int(2, 1) == 1);
  auto f3 = FieldCtx::make(3, 1);
  CHECK(witt_coefficient(f3, 1) == f3.one());
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(FieldCtx::make(4, 1), Error);
  CHECK_THROWS_AS(FieldCtx::make(3, 0), Error);
  auto f3 = FieldCtx::make(3, 1);
  CHECK_THROWS_AS(f3.zero().inv(), Error);
  CHECK_THROWS_AS(f3.zero().pow(-1), Error);
}
