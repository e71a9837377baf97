#include "imprim/table.hpp"

namespace imprim {

FieldTable::FieldTable(const FieldCtx& ctx) : ctx_(&ctx), q_(ctx.order()) {
  elems_.reserve(q_);
  for (long long i = 0; i < q_; ++i) elems_.push_back(ctx.from_index(i));
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_, 0);
  for (long long i = 0; i < q_; ++i) {
    neg_[i] = index(-elems_[i]);
    if (i != 0) inv_[i] = index(elems_[i].inv());
    for (long long j = 0; j < q_; ++j) {
      add_[i * q_ + j] = index(elems_[i] + elems_[j]);
      mul_[i * q_ + j] = index(elems_[i] * elems_[j]);
    }
  }
}

int FieldTable::inv(int a) const {
  if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
  return inv_[a];
}

int FieldTable::pow(int a, long long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  long long m = q_ - 1;
  e %= m;
  if (e < 0) e += m;
  int r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::vector<int> FieldTable::pow_map(long long e) const {
  std::vector<int> m(q_);
  for (long long i = 0; i < q_; ++i) m[i] = pow(static_cast<int>(i), e);
  return m;
}

SmallGroup::SmallGroup(const GroupParams& gp, const FieldTable& table)
    : gp_(gp), F_(&table), q_(table.q()) {
  GroupLaw law(gp, table.ctx());
  beta_.resize(q_ * q_);
  psi2_.resize(q_ * q_);
  for (long long i = 0; i < q_; ++i) {
    for (long long j = 0; j < q_; ++j) {
      const FieldElem pt[2] = {table.elem(static_cast<int>(i)), table.elem(static_cast<int>(j))};
      beta_[i * q_ + j] = table.index(law.beta().eval(pt));
      psi2_[i * q_ + j] = table.index(law.psi2().eval(pt));
    }
  }
  pow_h2_ = table.pow_map(gp.h2);
  pow_h3_ = table.pow_map(gp.h3);
  pow_e1_.resize(q_);
  pow_e2_.resize(q_);
  pow_e3_.resize(q_);
  for (int a = 1; a < q_; ++a) {
    pow_e1_[a] = table.pow(a, gp.e1);
    pow_e2_[a] = table.pow(a, gp.e2);
    pow_e3_[a] = table.pow(a, gp.e3);
  }
}

SmallGroup::Elt SmallGroup::element(long long idx) const {
  Elt g;
  g.a = static_cast<int>(idx % (q_ - 1)) + 1;
  idx /= q_ - 1;
  g.u3 = static_cast<int>(idx % q_);
  idx /= q_;
  g.u2 = static_cast<int>(idx % q_);
  g.u1 = static_cast<int>(idx / q_);
  return g;
}

long long SmallGroup::index(const Elt& g) const {
  return ((static_cast<long long>(g.u1) * q_ + g.u2) * q_ + g.u3) * (q_ - 1) + (g.a - 1);
}

int SmallGroup::psi1(int x3, int y2, int y3) const {
  return F_->add(F_->mul(pow_h2_[y2], pow_h3_[x3]), beta_[x3 * q_ + y3]);
}

SmallGroup::Elt SmallGroup::mul(const Elt& g, const Elt& h) const {
  const int t1 = F_->mul(pow_e1_[g.a], h.u1);
  const int t2 = F_->mul(pow_e2_[g.a], h.u2);
  const int t3 = F_->mul(pow_e3_[g.a], h.u3);
  Elt r;
  r.u1 = F_->add(g.u1, F_->add(t1, psi1(g.u3, t2, t3)));
  r.u2 = F_->add(g.u2, F_->add(t2, psi2_[g.u3 * q_ + t3]));
  r.u3 = F_->add(g.u3, t3);
  r.a = F_->mul(g.a, h.a);
  return r;
}

SmallGroup::Elt SmallGroup::inv(const Elt& g) const {
  const int v3 = F_->neg(g.u3);
  const int v2 = F_->neg(F_->add(g.u2, psi2_[g.u3 * q_ + v3]));
  const int v1 = F_->neg(F_->add(g.u1, psi1(g.u3, v2, v3)));
  const int ai = F_->inv(g.a);
  Elt r;
  r.u1 = F_->mul(pow_e1_[ai], v1);
  r.u2 = F_->mul(pow_e2_[ai], v2);
  r.u3 = F_->mul(pow_e3_[ai], v3);
  r.a = ai;
  return r;
}

int SmallGroup::act_point(const Elt& g, int pt) const {
  const int x = point_x(pt), y = point_y(pt);
  // Lift (x, 0, y), apply the torus part, left-multiply, canonicalize.
  const int t1 = F_->mul(pow_e1_[g.a], x);
  const int t3 = F_->mul(pow_e3_[g.a], y);
  const int z1 = F_->add(g.u1, F_->add(t1, beta_[g.u3 * q_ + t3]));
  const int z2 = F_->add(g.u2, psi2_[g.u3 * q_ + t3]);
  const int z3 = F_->add(g.u3, t3);
  const int cx = F_->add(z1, F_->mul(pow_h2_[F_->neg(z2)], pow_h3_[z3]));
  return point(cx, z3);
}

int SmallGroup::act_block(const Elt& g, int b) const {
  return F_->add(g.u3, F_->mul(pow_e3_[g.a], b));
}

std::vector<int> SmallGroup::point_perm(const Elt& g) const {
  std::vector<int> perm(num_points());
  for (int pt = 0; pt < num_points(); ++pt) perm[pt] = act_point(g, pt);
  return perm;
}

std::vector<int> SmallGroup::block_perm(const Elt& g) const {
  std::vector<int> perm(q_);
  for (int b = 0; b < q_; ++b) perm[b] = act_block(g, b);
  return perm;
}

GroupElement SmallGroup::to_exact(const Elt& g) const {
  return {{F_->elem(g.u1), F_->elem(g.u2), F_->elem(g.u3)}, F_->elem(g.a)};
}

SmallGroup::Elt SmallGroup::from_exact(const GroupElement& g) const {
  return {F_->index(g.u[0]), F_->index(g.u[1]), F_->index(g.u[2]), F_->index(g.a)};
}

}  // namespace imprim
