#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "imprim/error.hpp"

namespace imprim {

// Maximum supported extension degree for finite fields.  Large enough for
// every field the enumeration suites touch (up to F_81).
inline constexpr int kMaxExtDegree = 4;

class FieldElem;

// Descriptor of the coefficient field: F_{p^k} for prime p, or Q when p = 0.
// The modulus is a monic irreducible of degree k over F_p, stored as
// coefficients c[0..k] with c[k] = 1.  For k = 1 (and for Q) the identity
// convention modulus T is used.
class FieldCtx {
public:
  static FieldCtx make(long long p, int k);

  long long characteristic() const { return p_; }
  int extension_degree() const { return k_; }
  const std::vector<long long>& modulus() const { return modulus_; }
  bool finite() const { return p_ > 0; }
  // p^k; only meaningful for finite fields.
  long long order() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long n) const;
  FieldElem from_rational(long long num, long long den) const;
  // Coefficient vector c[0..k-1] over F_p; finite fields only.
  FieldElem from_coeffs(const std::vector<long long>& c) const;
  // Enumeration: element with base-p digit vector of i (i in [0, order())).
  FieldElem from_index(long long i) const;
  long long index_of(const FieldElem& x) const;

  std::string modulus_string() const;
  bool operator==(const FieldCtx& o) const { return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_; }

private:
  long long p_ = 0;
  int k_ = 1;
  std::vector<long long> modulus_;
};

bool is_prime(long long n);
// Process-wide cache of field contexts with stable addresses; use when a
// returned value must outlive the local scope.
const FieldCtx& shared_field(long long p, int k);
// Exact binomial(p, i)/p, computed in integers (the Witt addition coefficients).
long long witt_coefficient_int(long long p, long long i);
// The same coefficient reduced into ctx (characteristic of ctx is p).
FieldElem witt_coefficient(const FieldCtx& ctx, long long i);

// An exact field element.  For p > 0 the coefficient vector lives in v[0..k-1];
// for p = 0 it is a reduced rational v[0]/v[1] with v[1] > 0.  The context must
// outlive the element.
class FieldElem {
public:
  FieldElem() : ctx_(nullptr) {}

  const FieldCtx& ctx() const { return *ctx_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inv() const;
  // Exact power; n may be negative only for nonzero elements.  0^0 = 1.
  FieldElem pow(long long n) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  // Total order within one context (coefficient-lexicographic), for
  // deterministic reports.
  bool operator<(const FieldElem& o) const;

  long long coeff(int i) const { return v_[i]; }
  std::string to_string() const;

private:
  friend class FieldCtx;
  const FieldCtx* ctx_;
  std::array<long long, kMaxExtDegree> v_{};

  void reduce_rational();
};

}  // namespace imprim
