#pragma once

#include <optional>
#include <string>

#include "imprim/poly.hpp"

namespace imprim {

enum class BetaTag { Zero, Witt, Monomial, NCm, NCn };

const char* beta_tag_name(BetaTag t);
std::optional<BetaTag> beta_tag_parse(const std::string& s);

// The shape of the cocycle beta of the group law.  Witt carries r; Monomial
// carries r < s (r = s tolerated in characteristic 2 behind the relaxation
// flag); the noncommutative kinds carry (l2, l3, m, n) with m < n and
// l3 - l2 = m (NCm) or l3 - l2 = n (NCn).
struct BetaKind {
  BetaTag tag = BetaTag::Zero;
  long long r = 0, s = 0;
  long long l2 = 0, l3 = 0, m = 0, n = 0;

  static BetaKind zero() { return {}; }
  static BetaKind witt(long long r) { return {BetaTag::Witt, r}; }
  static BetaKind monomial(long long r, long long s) { return {BetaTag::Monomial, r, s}; }
  static BetaKind ncm(long long l2, long long l3, long long m, long long n) {
    return {BetaTag::NCm, 0, 0, l2, l3, m, n};
  }
  static BetaKind ncn(long long l2, long long l3, long long m, long long n) {
    return {BetaTag::NCn, 0, 0, l2, l3, m, n};
  }

  bool noncommutative() const { return tag == BetaTag::NCm || tag == BetaTag::NCn; }
  bool operator==(const BetaKind& o) const = default;
};

// Unvalidated parameter record as it arrives from the CLI or a config file.
// For noncommutative kinds e2, h2, h3 may be omitted (they are forced by the
// other data); when given they are cross-checked.
struct RawParams {
  FieldCtx field;
  std::optional<long long> e2;
  long long e3 = 1;
  std::optional<long long> h2;
  std::optional<long long> h3;
  BetaKind beta;
  bool allow_equal_exponents = false;
};

// Validated parameters of the classified family, with e1 derived.
struct GroupParams {
  FieldCtx field;
  long long e1 = 0;
  long long e2 = 0;
  long long e3 = 1;
  long long h2 = 1;
  long long h3 = 1;
  BetaKind beta;
  bool allow_equal_exponents = false;

  long long characteristic() const { return field.characteristic(); }
  std::string label() const;
};

GroupParams params_validate(const RawParams& raw);

// Convenience for tests: validate over F_p (extension degree 1).
GroupParams make_params(long long p, long long e2, long long e3, long long h2, long long h3,
                        BetaKind beta, bool allow_equal = false);

long long beta_degree(long long p, const BetaKind& beta);

// beta in variables (x3, y3), coefficients taken in ctx (same characteristic
// as the params).
MultiPoly beta_poly(const GroupParams& gp, const FieldCtx& ctx);
inline MultiPoly beta_poly(const GroupParams& gp) { return beta_poly(gp, gp.field); }

// psi1 in (x3, y2, y3); psi2 in (x3, y3).
MultiPoly psi1_poly(const GroupParams& gp, const FieldCtx& ctx);
MultiPoly psi2_poly(const GroupParams& gp, const FieldCtx& ctx);
inline MultiPoly psi1_poly(const GroupParams& gp) { return psi1_poly(gp, gp.field); }
inline MultiPoly psi2_poly(const GroupParams& gp) { return psi2_poly(gp, gp.field); }

long long ipow(long long base, long long exp);
bool is_p_power(long long x, long long p);

}  // namespace imprim
