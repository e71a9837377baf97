#include "imprim/action.hpp"

namespace imprim {

PointOmega canonical_point(const GroupLaw& law, const UnipElem& z) {
  const GroupParams& gp = law.params();
  // z * (0, -z2, 0) has second coordinate 0 and first coordinate
  // z1 + (-z2)^{h2} z3^{h3}.
  FieldElem x = z[0] + (-z[1]).pow(gp.h2) * z[2].pow(gp.h3);
  return {x, z[2]};
}

PointOmega act(const GroupLaw& law, const GroupElement& g, const PointOmega& p) {
  UnipElem lift = {p.x, law.ctx().zero(), p.y};
  UnipElem z = law.unip_mul(g.u, law.torus_apply(g.a, lift));
  return canonical_point(law, z);
}

BlockId act_on_block(const GroupLaw& law, const GroupElement& g, const BlockId& b) {
  return {g.u[2] + g.a.pow(law.params().e3) * b.y};
}

PointOmega act_closed_form(const GroupLaw& law, const GroupElement& g, const PointOmega& p) {
  const GroupParams& gp = law.params();
  FieldElem ay = g.a.pow(gp.e3) * p.y;
  FieldElem x = g.u[0] + g.a.pow(gp.e2 * gp.h2 + gp.e3 * gp.h3) * p.x +
                law.eval_psi1(g.u[2], law.ctx().zero(), ay);
  return {x, g.u[2] + ay};
}

}  // namespace imprim
