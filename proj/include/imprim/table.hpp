#pragma once

#include <vector>

#include "imprim/group.hpp"

namespace imprim {

// Dense arithmetic tables for a small finite field; elements are their
// enumeration indices (0 is zero, 1 is one).  Backs the exhaustive suites.
class FieldTable {
public:
  explicit FieldTable(const FieldCtx& ctx);

  const FieldCtx& ctx() const { return *ctx_; }
  long long q() const { return q_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  // a^e; e may be negative only for a != 0.  0^0 = 1.
  int pow(int a, long long e) const;
  // The whole power map x -> x^e (e >= 0).
  std::vector<int> pow_map(long long e) const;

  const FieldElem& elem(int i) const { return elems_[i]; }
  int index(const FieldElem& x) const { return static_cast<int>(ctx_->index_of(x)); }

private:
  const FieldCtx* ctx_;
  long long q_;
  std::vector<int> add_, mul_, neg_, inv_;
  std::vector<FieldElem> elems_;
};

// One parameter tuple realized over a small finite field, with the group law,
// the point action and the block action fully tabulated.  Elements are index
// quadruples; points are indices x*q + y; blocks are field indices.
class SmallGroup {
public:
  struct Elt {
    int u1, u2, u3, a;
    bool operator==(const Elt&) const = default;
  };

  SmallGroup(const GroupParams& gp, const FieldTable& table);

  const GroupParams& params() const { return gp_; }
  const FieldTable& field() const { return *F_; }
  long long q() const { return q_; }
  long long size() const { return q_ * q_ * q_ * (q_ - 1); }
  long long num_points() const { return q_ * q_; }

  Elt identity() const { return {0, 0, 0, 1}; }
  Elt element(long long idx) const;
  long long index(const Elt& g) const;

  Elt mul(const Elt& g, const Elt& h) const;
  Elt inv(const Elt& g) const;

  int point(int x, int y) const { return x * static_cast<int>(q_) + y; }
  int point_x(int pt) const { return pt / static_cast<int>(q_); }
  int point_y(int pt) const { return pt % static_cast<int>(q_); }
  int act_point(const Elt& g, int pt) const;
  int act_block(const Elt& g, int b) const;
  // The permutation of all q^2 points induced by g.
  std::vector<int> point_perm(const Elt& g) const;
  std::vector<int> block_perm(const Elt& g) const;

  int beta(int x3, int y3) const { return beta_[x3 * q_ + y3]; }
  int psi2(int x3, int y3) const { return psi2_[x3 * q_ + y3]; }
  int psi1(int x3, int y2, int y3) const;

  GroupElement to_exact(const Elt& g) const;
  Elt from_exact(const GroupElement& g) const;

private:
  GroupParams gp_;
  const FieldTable* F_;
  long long q_;
  std::vector<int> beta_, psi2_;
  std::vector<int> pow_h2_, pow_h3_;    // defined on all of F_q
  std::vector<int> pow_e1_, pow_e2_, pow_e3_;  // defined on F_q^* (index 0 unused)
};

}  // namespace imprim
