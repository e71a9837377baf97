#include "imprim/params.hpp"

#include <sstream>

namespace imprim {

const char* beta_tag_name(BetaTag t) {
  switch (t) {
    case BetaTag::Zero: return "zero";
    case BetaTag::Witt: return "witt";
    case BetaTag::Monomial: return "monomial";
    case BetaTag::NCm: return "ncm";
    case BetaTag::NCn: return "ncn";
  }
  return "?";
}

std::optional<BetaTag> beta_tag_parse(const std::string& s) {
  if (s == "zero") return BetaTag::Zero;
  if (s == "witt") return BetaTag::Witt;
  if (s == "monomial") return BetaTag::Monomial;
  if (s == "ncm") return BetaTag::NCm;
  if (s == "ncn") return BetaTag::NCn;
  return std::nullopt;
}

long long ipow(long long base, long long exp) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_p_power(long long x, long long p) {
  if (x < 1) return false;
  while (x % p == 0) x /= p;
  return x == 1;
}

long long beta_degree(long long p, const BetaKind& b) {
  switch (b.tag) {
    case BetaTag::Zero: return 0;
    case BetaTag::Witt: return ipow(p, b.r + 1);
    case BetaTag::Monomial: return ipow(p, b.r) + ipow(p, b.s);
    case BetaTag::NCm:
    case BetaTag::NCn: return 2 * ipow(p, b.l3) + ipow(p, b.l2 + (b.tag == BetaTag::NCm ? b.n : b.m));
  }
  return 0;
}

GroupParams params_validate(const RawParams& raw) {
  const long long p = raw.field.characteristic();
  const BetaKind& b = raw.beta;

  switch (b.tag) {
    case BetaTag::Zero:
      break;
    case BetaTag::Witt:
      if (p == 0) fail(Errc::BadCharForBeta, "witt beta needs positive characteristic");
      if (b.r < 0) fail(Errc::BadExponentOrder, "witt exponent r must be nonnegative");
      break;
    case BetaTag::Monomial:
      if (p == 0) fail(Errc::BadCharForBeta, "monomial beta needs positive characteristic");
      if (b.r < 0 || b.s < 0) fail(Errc::BadExponentOrder, "monomial exponents must be nonnegative");
      if (b.r > b.s) fail(Errc::BadExponentOrder, "monomial beta needs r < s");
      if (b.r == b.s && !(p == 2 && raw.allow_equal_exponents))
        fail(Errc::BadExponentOrder,
             "monomial beta needs r < s (r = s only in characteristic 2 with the relaxation flag)");
      break;
    case BetaTag::NCm:
    case BetaTag::NCn:
      if (p <= 2) fail(Errc::BadCharForBeta, "noncommutative kinds need characteristic p > 2");
      if (b.l2 < 0 || b.l3 < 0 || b.m < 0 || b.n < 0)
        fail(Errc::BadExponentOrder, "nc exponents must be nonnegative");
      if (b.m >= b.n) fail(Errc::BadExponentOrder, "nc kinds need m < n");
      if (b.tag == BetaTag::NCm && b.l3 - b.l2 != b.m)
        fail(Errc::BadE1Consistency, "ncm needs l3 - l2 = m");
      if (b.tag == BetaTag::NCn && b.l3 - b.l2 != b.n)
        fail(Errc::BadE1Consistency, "ncn needs l3 - l2 = n");
      break;
  }

  GroupParams gp;
  gp.field = raw.field;
  gp.beta = b;
  gp.allow_equal_exponents = raw.allow_equal_exponents;

  gp.e3 = raw.e3;
  if (p == 0) {
    if (gp.e3 != 1) fail(Errc::BadE3, "characteristic 0 needs e3 = 1");
  } else if (!is_p_power(gp.e3, p)) {
    fail(Errc::BadE3, "e3 must be a positive p-power");
  }

  if (b.noncommutative()) {
    const long long want_h2 = ipow(p, b.l2), want_h3 = ipow(p, b.l3);
    if (raw.h2 && *raw.h2 != want_h2) fail(Errc::BadH, "nc kinds force h2 = p^l2");
    if (raw.h3 && *raw.h3 != want_h3) fail(Errc::BadH, "nc kinds force h3 = p^l3");
    gp.h2 = want_h2;
    gp.h3 = want_h3;
    const long long want_e2 = gp.e3 * (ipow(p, b.m) + ipow(p, b.n));
    if (raw.e2 && *raw.e2 != want_e2) fail(Errc::BadE2NC, "nc kinds force e2 = e3*(p^m + p^n)");
    gp.e2 = want_e2;
  } else {
    gp.h2 = raw.h2.value_or(1);
    gp.h3 = raw.h3.value_or(1);
    if (p == 0) {
      if (gp.h2 != 1 || gp.h3 != 1) fail(Errc::BadH, "characteristic 0 needs h2 = h3 = 1");
    } else if (!is_p_power(gp.h2, p) || !is_p_power(gp.h3, p)) {
      fail(Errc::BadH, "h2 and h3 must be positive p-powers");
    }
    if (b.tag == BetaTag::Zero) {
      if (!raw.e2 || *raw.e2 == 0)
        fail(Errc::BadE1Consistency, "zero beta needs an explicit nonzero e2");
      gp.e2 = *raw.e2;
    } else {
      // e2*h2 = e3*(deg(beta) - h3).
      const long long rhs = gp.e3 * (beta_degree(p, b) - gp.h3);
      if (raw.e2) {
        if (*raw.e2 * gp.h2 != rhs) fail(Errc::BadE1Consistency, "e2*h2 = e3*(deg(beta) - h3) violated");
        gp.e2 = *raw.e2;
      } else {
        if (rhs % gp.h2 != 0 || rhs == 0)
          fail(Errc::BadE1Consistency, "e3*(deg(beta) - h3) not divisible by h2");
        gp.e2 = rhs / gp.h2;
      }
    }
  }

  gp.e1 = gp.e2 * gp.h2 + gp.e3 * gp.h3;
  if (b.tag != BetaTag::Zero && gp.e1 != gp.e3 * beta_degree(p, b))
    fail(Errc::BadE1Consistency, "e1 = e3*deg(beta) violated");
  return gp;
}

GroupParams make_params(long long p, long long e2, long long e3, long long h2, long long h3,
                        BetaKind beta, bool allow_equal) {
  RawParams raw;
  raw.field = FieldCtx::make(p, 1);
  raw.e2 = e2;
  raw.e3 = e3;
  raw.h2 = h2;
  raw.h3 = h3;
  raw.beta = beta;
  raw.allow_equal_exponents = allow_equal;
  return params_validate(raw);
}

std::string GroupParams::label() const {
  std::ostringstream os;
  os << "p=" << field.characteristic() << " e=(" << e1 << "," << e2 << "," << e3 << ") h=(" << h2
     << "," << h3 << ") beta=" << beta_tag_name(beta.tag);
  switch (beta.tag) {
    case BetaTag::Zero: break;
    case BetaTag::Witt: os << "(" << beta.r << ")"; break;
    case BetaTag::Monomial: os << "(" << beta.r << "," << beta.s << ")"; break;
    case BetaTag::NCm:
    case BetaTag::NCn:
      os << "(" << beta.l2 << "," << beta.l3 << "," << beta.m << "," << beta.n << ")";
      break;
  }
  return os.str();
}

static const std::vector<std::string> kBetaVars = {"x3", "y3"};

MultiPoly beta_poly(const GroupParams& gp, const FieldCtx& ctx) {
  const long long p = ctx.characteristic();
  MultiPoly acc = MultiPoly::zero(ctx, kBetaVars);
  const BetaKind& b = gp.beta;
  switch (b.tag) {
    case BetaTag::Zero:
      break;
    case BetaTag::Witt: {
      const long long pr = ipow(p, b.r);
      for (long long i = 1; i <= p - 1; ++i)
        acc.add_term({i * pr, (p - i) * pr}, witt_coefficient(ctx, i));
      break;
    }
    case BetaTag::Monomial:
      acc.add_term({ipow(p, b.r), ipow(p, b.s)}, ctx.one());
      break;
    case BetaTag::NCm: {
      const FieldElem half = ctx.from_int(2).inv();
      acc.add_term({2 * ipow(p, b.l3), ipow(p, b.l2 + b.n)}, half);
      break;
    }
    case BetaTag::NCn: {
      const FieldElem half = ctx.from_int(2).inv();
      acc.add_term({ipow(p, b.l3) + ipow(p, b.l2 + b.m), ipow(p, b.l3)}, ctx.one());
      acc.add_term({ipow(p, b.l2 + b.m), 2 * ipow(p, b.l3)}, half);
      break;
    }
  }
  return acc;
}

MultiPoly psi2_poly(const GroupParams& gp, const FieldCtx& ctx) {
  MultiPoly acc = MultiPoly::zero(ctx, kBetaVars);
  if (gp.beta.noncommutative()) {
    const long long p = ctx.characteristic();
    acc.add_term({ipow(p, gp.beta.m), ipow(p, gp.beta.n)}, ctx.one());
  }
  return acc;
}

MultiPoly psi1_poly(const GroupParams& gp, const FieldCtx& ctx) {
  const std::vector<std::string> vars = {"x3", "y2", "y3"};
  MultiPoly acc = MultiPoly::monomial(ctx, vars, {gp.h3, gp.h2, 0}, ctx.one());
  // beta(x3, y3) lifted into (x3, y2, y3).
  return acc + beta_poly(gp, ctx).relabel(vars, {0, 2});
}

}  // namespace imprim
