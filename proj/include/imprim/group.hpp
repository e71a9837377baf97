#pragma once

#include <array>

#include "imprim/params.hpp"

namespace imprim {

using UnipElem = std::array<FieldElem, 3>;

// An element (u1,u2,u3,a) of G = G_u x| T; a != 0.
struct GroupElement {
  UnipElem u;
  FieldElem a;
};

// The group law of one parameter tuple realized over a concrete field (same
// characteristic as the parameters, possibly a bigger extension).
class GroupLaw {
public:
  GroupLaw(const GroupParams& gp, const FieldCtx& ctx);

  const GroupParams& params() const { return gp_; }
  const FieldCtx& ctx() const { return *ctx_; }
  const MultiPoly& psi1() const { return psi1_; }
  const MultiPoly& psi2() const { return psi2_; }
  const MultiPoly& beta() const { return beta_; }

  UnipElem unip_identity() const;
  UnipElem unip_mul(const UnipElem& x, const UnipElem& y) const;
  UnipElem unip_inv(const UnipElem& x) const;
  // Diagonal torus action (a^e1 u1, a^e2 u2, a^e3 u3); a must be nonzero.
  UnipElem torus_apply(const FieldElem& a, const UnipElem& x) const;

  GroupElement identity() const;
  GroupElement mul(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;

  FieldElem eval_psi1(const FieldElem& x3, const FieldElem& y2, const FieldElem& y3) const;
  FieldElem eval_psi2(const FieldElem& x3, const FieldElem& y3) const;

private:
  GroupParams gp_;
  const FieldCtx* ctx_;
  MultiPoly beta_, psi1_, psi2_;
};

// The symbolic associator (x*y)*z - x*(y*z) of unip_mul, coordinate-wise, in
// the nine variables (x1,x2,x3,y1,y2,y3,z1,z2,z3).  Identically zero exactly
// when the parameters define a group.
std::array<MultiPoly, 3> assoc_witness(const GroupParams& gp);

// Same associator for an arbitrary (possibly corrupted) pair of polynomials
// psi1(x3,y2,y3), psi2(x3,y3); negative-control hook.
std::array<MultiPoly, 3> assoc_witness_for(const MultiPoly& psi1, const MultiPoly& psi2);

}  // namespace imprim
