#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "imprim/field.hpp"

namespace imprim {

// Sparse exact multivariate polynomial.  Terms map exponent tuples (length =
// number of variables) to nonzero coefficients; the map order gives a
// canonical term order for printing and comparison.
class MultiPoly {
public:
  using Exps = std::vector<long long>;

  MultiPoly() : ctx_(nullptr) {}
  static MultiPoly zero(const FieldCtx& ctx, std::vector<std::string> vars);
  static MultiPoly constant(const FieldCtx& ctx, std::vector<std::string> vars, const FieldElem& c);
  static MultiPoly monomial(const FieldCtx& ctx, std::vector<std::string> vars, Exps e,
                            const FieldElem& c);
  static MultiPoly variable(const FieldCtx& ctx, std::vector<std::string> vars, size_t index);

  const FieldCtx& ctx() const { return *ctx_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exps, FieldElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long total_degree() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const FieldElem& c) const;
  MultiPoly pow(long long n) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  FieldElem eval(std::span<const FieldElem> point) const;
  // Substitute args[i] for variable i; all args must share context and
  // variable list, which becomes the variable list of the result.
  MultiPoly compose(const std::vector<MultiPoly>& args) const;
  // Same polynomial viewed in a bigger variable list: variable i of *this
  // becomes variable map[i].
  MultiPoly relabel(std::vector<std::string> vars, const std::vector<size_t>& map) const;

  std::string to_string() const;

  void add_term(const Exps& e, const FieldElem& c);

private:
  const FieldCtx* ctx_;
  std::vector<std::string> vars_;
  std::map<Exps, FieldElem> terms_;
};

// delta1(f)(x,y) = f(x) + f(y) - f(x+y) for univariate f; result in vars (x,y).
MultiPoly delta1(const MultiPoly& f);

// delta2(b)(z1,z2,z3) = b(z1,z2) + b(z1+z2,z3) - b(z2,z3) - b(z1,z2+z3) for
// bivariate b; result in vars (z1,z2,z3).
MultiPoly delta2(const MultiPoly& b);

// Sum over S3 of sign(pi) * P(z_{pi(1)}, z_{pi(2)}, z_{pi(3)}) for trivariate P.
MultiPoly alternating_sum_s3(const MultiPoly& trivariate);

}  // namespace imprim
