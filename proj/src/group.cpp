#include "imprim/group.hpp"

namespace imprim {

GroupLaw::GroupLaw(const GroupParams& gp, const FieldCtx& ctx)
    : gp_(gp),
      ctx_(&ctx),
      beta_(beta_poly(gp, ctx)),
      psi1_(psi1_poly(gp, ctx)),
      psi2_(psi2_poly(gp, ctx)) {
  if (ctx.characteristic() != gp.field.characteristic())
    fail(Errc::InvalidCharacteristic, "group law field must match the parameter characteristic");
}

FieldElem GroupLaw::eval_psi1(const FieldElem& x3, const FieldElem& y2,
                              const FieldElem& y3) const {
  const FieldElem pt[3] = {x3, y2, y3};
  return psi1_.eval(pt);
}

FieldElem GroupLaw::eval_psi2(const FieldElem& x3, const FieldElem& y3) const {
  const FieldElem pt[2] = {x3, y3};
  return psi2_.eval(pt);
}

UnipElem GroupLaw::unip_identity() const {
  return {ctx_->zero(), ctx_->zero(), ctx_->zero()};
}

UnipElem GroupLaw::unip_mul(const UnipElem& x, const UnipElem& y) const {
  return {x[0] + y[0] + eval_psi1(x[2], y[1], y[2]), x[1] + y[1] + eval_psi2(x[2], y[2]),
          x[2] + y[2]};
}

UnipElem GroupLaw::unip_inv(const UnipElem& x) const {
  // Solve coordinate-wise from the triangular product.
  FieldElem v3 = -x[2];
  FieldElem v2 = -x[1] - eval_psi2(x[2], v3);
  FieldElem v1 = -x[0] - eval_psi1(x[2], v2, v3);
  return {v1, v2, v3};
}

UnipElem GroupLaw::torus_apply(const FieldElem& a, const UnipElem& x) const {
  if (a.is_zero()) fail(Errc::NotATorusElement, "torus elements are nonzero");
  return {a.pow(gp_.e1) * x[0], a.pow(gp_.e2) * x[1], a.pow(gp_.e3) * x[2]};
}

GroupElement GroupLaw::identity() const { return {unip_identity(), ctx_->one()}; }

GroupElement GroupLaw::mul(const GroupElement& g, const GroupElement& h) const {
  return {unip_mul(g.u, torus_apply(g.a, h.u)), g.a * h.a};
}

GroupElement GroupLaw::inverse(const GroupElement& g) const {
  FieldElem ai = g.a.inv();
  return {torus_apply(ai, unip_inv(g.u)), ai};
}

namespace {

std::array<MultiPoly, 3> symbolic_mul(const MultiPoly& psi1, const MultiPoly& psi2,
                                      const std::array<MultiPoly, 3>& x,
                                      const std::array<MultiPoly, 3>& y) {
  return {x[0] + y[0] + psi1.compose({x[2], y[1], y[2]}),
          x[1] + y[1] + psi2.compose({x[2], y[2]}), x[2] + y[2]};
}

}  // namespace

std::array<MultiPoly, 3> assoc_witness_for(const MultiPoly& psi1, const MultiPoly& psi2) {
  const FieldCtx& ctx = psi1.ctx();
  const std::vector<std::string> vars = {"x1", "x2", "x3", "y1", "y2",
                                         "y3", "z1", "z2", "z3"};
  auto triple = [&](size_t base) -> std::array<MultiPoly, 3> {
    return {MultiPoly::variable(ctx, vars, base), MultiPoly::variable(ctx, vars, base + 1),
            MultiPoly::variable(ctx, vars, base + 2)};
  };
  auto x = triple(0), y = triple(3), z = triple(6);
  auto lhs = symbolic_mul(psi1, psi2, symbolic_mul(psi1, psi2, x, y), z);
  auto rhs = symbolic_mul(psi1, psi2, x, symbolic_mul(psi1, psi2, y, z));
  return {lhs[0] - rhs[0], lhs[1] - rhs[1], lhs[2] - rhs[2]};
}

std::array<MultiPoly, 3> assoc_witness(const GroupParams& gp) {
  return assoc_witness_for(psi1_poly(gp), psi2_poly(gp));
}

}  // namespace imprim
