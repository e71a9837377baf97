#include "imprim/cocycle.hpp"

namespace imprim {

namespace {

// Reduced row echelon solve; returns the canonical solution (free unknowns
// zero) or nullopt when inconsistent.
std::optional<std::vector<FieldElem>> gauss(std::vector<std::vector<FieldElem>> M,
                                            std::vector<FieldElem> b, const FieldCtx& ctx,
                                            long long* rank_out, long long* aug_rank_out) {
  const size_t rows = M.size();
  const size_t cols = rows ? M[0].size() : 0;
  std::vector<std::pair<size_t, size_t>> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && M[pr][c].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(M[pr], M[r]);
    std::swap(b[pr], b[r]);
    FieldElem piv = M[r][c].inv();
    for (size_t j = c; j < cols; ++j) M[r][j] = M[r][j] * piv;
    b[r] = b[r] * piv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      FieldElem f = M[i][c];
      for (size_t j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  *rank_out = static_cast<long long>(pivots.size());
  *aug_rank_out = *rank_out;
  for (size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) {
      *aug_rank_out = *rank_out + 1;
      return std::nullopt;
    }
  }
  std::vector<FieldElem> x(cols, ctx.zero());
  for (auto [pr2, pc] : pivots) x[pc] = b[pr2];
  return x;
}

}  // namespace

MultiPoly target_poly(const TargetMonomial& t, const FieldCtx& ctx) {
  return MultiPoly::monomial(ctx, {"z1", "z2", "z3"}, {t.A, t.B, t.C}, ctx.one());
}

bool admissible_target(const TargetMonomial& t) {
  const FieldCtx& ctx = shared_field(t.p, 1);
  return alternating_sum_s3(target_poly(t, ctx)).is_zero();
}

Delta2Solution solve_delta2(const TargetMonomial& t, long long degree_bound) {
  const FieldCtx& ctx = shared_field(t.p, 1);
  const std::vector<std::string> xy = {"x3", "y3"};
  Delta2Solution sol;
  const long long d0 = t.A + t.B + t.C;

  // Unknown monomials x^i y^j, i,j >= 1, of the target's homogeneous degree.
  std::vector<std::pair<long long, long long>> unknowns;
  if (d0 <= degree_bound)
    for (long long i = 1; i <= d0 - 1; ++i) unknowns.emplace_back(i, d0 - i);
  sol.unknowns = static_cast<long long>(unknowns.size());

  std::map<MultiPoly::Exps, size_t> row_of;
  std::vector<std::vector<FieldElem>> columns;
  auto row_index = [&](const MultiPoly::Exps& e) {
    auto it = row_of.find(e);
    if (it == row_of.end()) it = row_of.emplace(e, row_of.size()).first;
    return it->second;
  };

  std::vector<std::map<size_t, FieldElem>> sparse_cols;
  for (auto [i, j] : unknowns) {
    MultiPoly mono = MultiPoly::monomial(ctx, xy, {i, j}, ctx.one());
    MultiPoly image = delta2(mono);
    std::map<size_t, FieldElem> col;
    for (const auto& [e, c] : image.terms()) col[row_index(e)] = c;
    sparse_cols.push_back(std::move(col));
  }
  MultiPoly rhs_poly = target_poly(t, ctx);
  std::map<size_t, FieldElem> rhs_sparse;
  for (const auto& [e, c] : rhs_poly.terms()) rhs_sparse[row_index(e)] = c;

  const size_t rows = row_of.size();
  sol.equations = static_cast<long long>(rows);
  std::vector<std::vector<FieldElem>> M(rows, std::vector<FieldElem>(unknowns.size(), ctx.zero()));
  std::vector<FieldElem> b(rows, ctx.zero());
  for (size_t c = 0; c < sparse_cols.size(); ++c)
    for (const auto& [r, v] : sparse_cols[c]) M[r][c] = v;
  for (const auto& [r, v] : rhs_sparse) b[r] = v;

  auto x = gauss(std::move(M), std::move(b), ctx, &sol.rank, &sol.augmented_rank);
  if (!x) return sol;
  MultiPoly beta = MultiPoly::zero(ctx, xy);
  for (size_t c = 0; c < unknowns.size(); ++c)
    beta.add_term({unknowns[c].first, unknowns[c].second}, (*x)[c]);
  sol.beta = std::move(beta);
  return sol;
}

std::optional<MultiPoly> is_coboundary(const MultiPoly& kappa, long long degree_bound) {
  if (kappa.vars().size() != 2) fail(Errc::InvalidIndex, "is_coboundary wants a bivariate kappa");
  const FieldCtx& ctx = kappa.ctx();
  const std::vector<std::string> tvar = {"T"};

  std::map<MultiPoly::Exps, size_t> row_of;
  auto row_index = [&](const MultiPoly::Exps& e) {
    auto it = row_of.find(e);
    if (it == row_of.end()) it = row_of.emplace(e, row_of.size()).first;
    return it->second;
  };

  std::vector<std::map<size_t, FieldElem>> sparse_cols;
  for (long long d = 1; d <= degree_bound; ++d) {
    MultiPoly image = delta1(MultiPoly::monomial(ctx, tvar, {d}, ctx.one()));
    std::map<size_t, FieldElem> col;
    for (const auto& [e, c] : image.terms()) col[row_index(e)] = c;
    sparse_cols.push_back(std::move(col));
  }
  std::map<size_t, FieldElem> rhs_sparse;
  for (const auto& [e, c] : kappa.terms()) rhs_sparse[row_index(e)] = c;

  const size_t rows = row_of.size();
  std::vector<std::vector<FieldElem>> M(rows, std::vector<FieldElem>(sparse_cols.size(), ctx.zero()));
  std::vector<FieldElem> b(rows, ctx.zero());
  for (size_t c = 0; c < sparse_cols.size(); ++c)
    for (const auto& [r, v] : sparse_cols[c]) M[r][c] = v;
  for (const auto& [r, v] : rhs_sparse) b[r] = v;

  long long rank = 0, aug = 0;
  auto x = gauss(std::move(M), std::move(b), ctx, &rank, &aug);
  if (!x) return std::nullopt;
  MultiPoly g = MultiPoly::zero(ctx, tvar);
  for (size_t c = 0; c < x->size(); ++c) g.add_term({static_cast<long long>(c) + 1}, (*x)[c]);
  return g;
}

TargetMonomial classification_target(const GroupParams& gp) {
  if (!gp.beta.noncommutative())
    fail(Errc::NotApplicable, "classification target exists for noncommutative kinds only");
  const long long p = gp.characteristic();
  const BetaKind& b = gp.beta;
  return {ipow(p, b.l3), ipow(p, b.l2 + b.m), ipow(p, b.l2 + b.n), p};
}

bool verify_beta_identity(const GroupParams& gp) {
  MultiPoly d2 = delta2(beta_poly(gp));
  if (!gp.beta.noncommutative()) return d2.is_zero();
  TargetMonomial t = classification_target(gp);
  return d2 == target_poly(t, gp.field);
}

}  // namespace imprim
