#include "imprim/poly.hpp"

#include <algorithm>
#include <sstream>

namespace imprim {

MultiPoly MultiPoly::zero(const FieldCtx& ctx, std::vector<std::string> vars) {
  MultiPoly p;
  p.ctx_ = &ctx;
  p.vars_ = std::move(vars);
  return p;
}

MultiPoly MultiPoly::constant(const FieldCtx& ctx, std::vector<std::string> vars,
                              const FieldElem& c) {
  MultiPoly p = zero(ctx, std::move(vars));
  p.add_term(Exps(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(const FieldCtx& ctx, std::vector<std::string> vars, Exps e,
                              const FieldElem& c) {
  MultiPoly p = zero(ctx, std::move(vars));
  if (e.size() != p.vars_.size()) fail(Errc::InvalidIndex, "exponent tuple length mismatch");
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::variable(const FieldCtx& ctx, std::vector<std::string> vars, size_t index) {
  Exps e(vars.size(), 0);
  e.at(index) = 1;
  return monomial(ctx, std::move(vars), std::move(e), ctx.one());
}

long long MultiPoly::total_degree() const {
  long long d = 0;
  for (const auto& [e, c] : terms_) {
    long long t = 0;
    for (long long x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

void MultiPoly::add_term(const Exps& e, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::scaled(const FieldElem& c) const {
  MultiPoly r = zero(*ctx_, vars_);
  for (const auto& [e, t] : terms_) r.add_term(e, t * c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r = zero(*ctx_, vars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exps e = e1;
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(long long n) const {
  if (n < 0) fail(Errc::InvalidIndex, "negative polynomial power");
  MultiPoly base = *this;
  MultiPoly r = constant(*ctx_, vars_, ctx_->one());
  while (n > 0) {
    if (n & 1) r = r * base;
    if (n >>= 1) base = base * base;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

FieldElem MultiPoly::eval(std::span<const FieldElem> point) const {
  if (point.size() != vars_.size()) fail(Errc::InvalidIndex, "evaluation arity mismatch");
  FieldElem acc = ctx_->zero();
  for (const auto& [e, c] : terms_) {
    FieldElem t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t = t * point[i].pow(e[i]);
    acc = acc + t;
  }
  return acc;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& args) const {
  if (args.size() != vars_.size()) fail(Errc::InvalidIndex, "composition arity mismatch");
  const std::vector<std::string>& out_vars = args.empty() ? vars_ : args[0].vars_;
  const FieldCtx& octx = args.empty() ? *ctx_ : *args[0].ctx_;
  MultiPoly r = zero(octx, out_vars);
  // Memoize powers of each argument; exponents repeat across terms.
  std::vector<std::map<long long, MultiPoly>> powers(args.size());
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(octx, out_vars, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = powers[i].find(e[i]);
      if (it == powers[i].end()) it = powers[i].emplace(e[i], args[i].pow(e[i])).first;
      t = t * it->second;
    }
    r = r + t;
  }
  return r;
}

MultiPoly MultiPoly::relabel(std::vector<std::string> vars, const std::vector<size_t>& map) const {
  MultiPoly r = zero(*ctx_, std::move(vars));
  for (const auto& [e, c] : terms_) {
    Exps ne(r.vars_.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne.at(map.at(i)) = e[i];
    r.add_term(ne, c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](long long x) { return x != 0; });
    bool coeff_shown = !has_var || !c.is_one();
    if (coeff_shown) os << c.to_string();
    bool need_star = coeff_shown;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly delta1(const MultiPoly& f) {
  if (f.vars().size() != 1) fail(Errc::InvalidIndex, "delta1 wants a univariate polynomial");
  const FieldCtx& ctx = f.ctx();
  std::vector<std::string> xy = {"x", "y"};
  MultiPoly x = MultiPoly::variable(ctx, xy, 0);
  MultiPoly y = MultiPoly::variable(ctx, xy, 1);
  return f.compose({x}) + f.compose({y}) - f.compose({x + y});
}

MultiPoly delta2(const MultiPoly& b) {
  if (b.vars().size() != 2) fail(Errc::InvalidIndex, "delta2 wants a bivariate polynomial");
  const FieldCtx& ctx = b.ctx();
  std::vector<std::string> zs = {"z1", "z2", "z3"};
  MultiPoly z1 = MultiPoly::variable(ctx, zs, 0);
  MultiPoly z2 = MultiPoly::variable(ctx, zs, 1);
  MultiPoly z3 = MultiPoly::variable(ctx, zs, 2);
  return b.compose({z1, z2}) + b.compose({z1 + z2, z3}) - b.compose({z2, z3}) -
         b.compose({z1, z2 + z3});
}

MultiPoly alternating_sum_s3(const MultiPoly& t) {
  if (t.vars().size() != 3) fail(Errc::InvalidIndex, "alternating sum wants three variables");
  const FieldCtx& ctx = t.ctx();
  const std::vector<std::string>& zs = t.vars();
  std::vector<MultiPoly> z = {MultiPoly::variable(ctx, zs, 0), MultiPoly::variable(ctx, zs, 1),
                              MultiPoly::variable(ctx, zs, 2)};
  static const int perms[6][4] = {{0, 1, 2, +1}, {1, 2, 0, +1}, {2, 0, 1, +1},
                                  {0, 2, 1, -1}, {1, 0, 2, -1}, {2, 1, 0, -1}};
  MultiPoly acc = MultiPoly::zero(ctx, zs);
  for (const auto& pm : perms) {
    MultiPoly term = t.compose({z[pm[0]], z[pm[1]], z[pm[2]]});
    acc = acc + (pm[3] > 0 ? term : -term);
  }
  return acc;
}

}  // namespace imprim
