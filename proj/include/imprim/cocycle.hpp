#pragma once

#include <optional>

#include "imprim/params.hpp"

namespace imprim {

// The right-hand side z1^A z2^B z3^C of the cocycle equation, over F_p.
struct TargetMonomial {
  long long A, B, C;
  long long p;
};

MultiPoly target_poly(const TargetMonomial& t, const FieldCtx& ctx);

// True iff the alternating S3-sum of the target vanishes over F_p (the
// necessary condition for delta2(beta) to hit it).
bool admissible_target(const TargetMonomial& t);

struct Delta2Solution {
  std::optional<MultiPoly> beta;  // in (x3, y3); empty when inconsistent
  long long unknowns = 0;
  long long equations = 0;
  long long rank = 0;
  long long augmented_rank = 0;
  bool consistent() const { return beta.has_value(); }
  long long rank_deficit() const { return augmented_rank - rank; }
};

// Exact linear solve of delta2(beta) = z1^A z2^B z3^C over unknown bivariate
// monomials x^i y^j with i, j >= 1 (so beta(0,y) = beta(x,0) = 0).  delta2
// preserves total degree, so only the homogeneous slice of degree A+B+C can
// contribute; unknowns beyond degree_bound are excluded.  The returned
// solution is the canonical one (free unknowns zero, lexicographically least
// pivots).
Delta2Solution solve_delta2(const TargetMonomial& t, long long degree_bound);
inline Delta2Solution solve_delta2(const TargetMonomial& t) {
  return solve_delta2(t, t.A + t.B + t.C);
}

// Decides whether kappa = delta1(g) for some univariate g with g(0) = 0 of
// degree <= degree_bound; returns g when it exists.
std::optional<MultiPoly> is_coboundary(const MultiPoly& kappa, long long degree_bound);

// delta2(beta) equals the classification target exactly (noncommutative
// kinds) or vanishes (commutative kinds).
bool verify_beta_identity(const GroupParams& gp);

// The classification target of a noncommutative parameter tuple.
TargetMonomial classification_target(const GroupParams& gp);

}  // namespace imprim
