#include "imprim/iso.hpp"

namespace imprim {

namespace {

long long nonneg_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

struct IndexedIso {
  int b1, b2, b3, d1, d2;
  long long deg1, deg2;
  // d_j * t^{deg_j} for every field index t, plus the plane shadow of f1:
  // a point (x,y) is the coset of (x,0,y), so its image re-canonicalizes to
  // x-coordinate b1*x + f1(y) + (-f2(y))^{h2'} (b3*y)^{h3'} with (h2',h3')
  // the target parameters.
  std::vector<int> f1, f2, f1_plane;

  IndexedIso(const FieldTable& F, int b2i, int b3i, int d1i, int d2i, long long h2, long long h3,
             long long deg1_, long long deg2_, long long h2_dst, long long h3_dst)
      : b2(b2i), b3(b3i), d1(d1i), d2(d2i), deg1(deg1_), deg2(deg2_) {
    b1 = F.mul(F.pow(b2, h2), F.pow(b3, h3));
    const int q = static_cast<int>(F.q());
    f1.assign(q, 0);
    f2.assign(q, 0);
    f1_plane.assign(q, 0);
    for (int t = 0; t < q; ++t) {
      if (d1 != 0) f1[t] = F.mul(d1, F.pow(t, deg1));
      if (d2 != 0) f2[t] = F.mul(d2, F.pow(t, deg2));
      f1_plane[t] = F.add(
          f1[t], F.mul(F.pow(F.neg(f2[t]), h2_dst), F.pow(F.mul(b3, t), h3_dst)));
    }
  }

  SmallGroup::Elt map_elt(const FieldTable& F, const SmallGroup::Elt& g) const {
    return {F.add(F.mul(b1, g.u1), f1[g.u3]), F.add(F.mul(b2, g.u2), f2[g.u3]),
            F.mul(b3, g.u3), g.a};
  }
  int map_point(const FieldTable& F, const SmallGroup& G, int pt) const {
    int x = G.point_x(pt), y = G.point_y(pt);
    return G.point(F.add(F.mul(b1, x), f1_plane[y]), F.mul(b3, y));
  }
};

std::vector<SmallGroup::Elt> generator_set(long long q, bool tiny) {
  std::vector<SmallGroup::Elt> S;
  const int qi = static_cast<int>(q);
  const int clim = tiny ? std::min(2, qi) : qi;
  for (int c = 1; c < clim; ++c) {
    S.push_back({c, 0, 0, 1});
    S.push_back({0, c, 0, 1});
    S.push_back({0, 0, c, 1});
  }
  const int alim = tiny ? std::min(3LL, q) : q;
  for (int a = 2; a < alim; ++a) S.push_back({0, 0, 0, a});
  return S;
}

bool hom_on_pairs(const IndexedIso& iso, const FieldTable& F, const SmallGroup& Gs,
                  const SmallGroup& Gd, const std::vector<SmallGroup::Elt>& A,
                  const std::vector<SmallGroup::Elt>& B) {
  for (const auto& g : A)
    for (const auto& h : B)
      if (iso.map_elt(F, Gs.mul(g, h)) != Gd.mul(iso.map_elt(F, g), iso.map_elt(F, h)))
        return false;
  return true;
}

nlohmann::json elt_json(const SmallGroup::Elt& g) {
  return nlohmann::json{{"u1", g.u1}, {"u2", g.u2}, {"u3", g.u3}, {"a", g.a}};
}

CheckResult check_iso_impl(const IndexedIso& iso, const FieldTable& F, const SmallGroup& Gs,
                           const SmallGroup& Gd, bool full_intertwine) {
  CheckResult res;
  res.name = "iso-check";
  const long long n = Gs.size();
  const long long np = Gs.num_points();
  res.counts["group-order"] = n;

  // Phi1 bijective (b's nonzero makes the coordinate map triangular, but we
  // verify by enumeration anyway).
  std::vector<char> seen(n, 0);
  for (long long i = 0; i < n; ++i) {
    long long j = Gd.index(iso.map_elt(F, Gs.element(i)));
    if (seen[j]) {
      res.record_failure({{"kind", "phi1-not-injective"}, {"element", i}});
      return res;
    }
    seen[j] = 1;
  }

  // Homomorphism on generators x everything; generators reach all of G, so
  // with Phi1(e) = e this extends to all pairs.
  auto S = generator_set(Gs.q(), false);
  long long pairs = 0;
  for (const auto& s : S) {
    SmallGroup::Elt fs = iso.map_elt(F, s);
    for (long long i = 0; i < n; ++i) {
      SmallGroup::Elt g = Gs.element(i);
      if (iso.map_elt(F, Gs.mul(s, g)) != Gd.mul(fs, iso.map_elt(F, g))) {
        res.record_failure({{"kind", "not-homomorphism"}, {"s", elt_json(s)}, {"g", elt_json(g)}});
        return res;
      }
      ++pairs;
    }
  }
  res.counts["generator-pairs"] = pairs;

  // Plane map: bijective, blockwise, intertwines the point actions.
  std::vector<int> pi(np);
  std::vector<char> pseen(np, 0);
  for (int pt = 0; pt < np; ++pt) {
    pi[pt] = iso.map_point(F, Gs, pt);
    if (pseen[pi[pt]]) {
      res.record_failure({{"kind", "phi2-not-injective"}, {"point", pt}});
      return res;
    }
    pseen[pi[pt]] = 1;
    if (Gd.point_y(pi[pt]) != F.mul(iso.b3, Gs.point_y(pt))) {
      res.record_failure({{"kind", "phi2-breaks-blocks"}, {"point", pt}});
      return res;
    }
  }
  long long checked = 0;
  const long long glim = full_intertwine ? n : 0;
  for (long long i = 0; i < glim; ++i) {
    SmallGroup::Elt g = Gs.element(i);
    SmallGroup::Elt fg = iso.map_elt(F, g);
    for (int pt = 0; pt < np; ++pt) {
      if (pi[Gs.act_point(g, pt)] != Gd.act_point(fg, pi[pt])) {
        res.record_failure({{"kind", "actions-not-intertwined"}, {"g", elt_json(g)}, {"point", pt}});
        return res;
      }
      ++checked;
    }
  }
  res.counts["intertwine-pairs"] = checked;
  return res;
}

IndexedIso index_descriptor(const IsoDescriptor& d, const FieldTable& F) {
  return IndexedIso(F, F.index(d.b2), F.index(d.b3), F.index(d.d1), F.index(d.d2), d.src.h2,
                    d.src.h3, d.deg1, d.deg2, d.dst.h2, d.dst.h3);
}

}  // namespace

const char* iso_case_name(IsoCase c) {
  switch (c) {
    case IsoCase::C141: return "zero-to-split-monomial";
    case IsoCase::C142: return "zero-to-twist-monomial";
    case IsoCase::C143: return "zero-to-square-monomial";
    case IsoCase::Custom: return "custom";
  }
  return "?";
}

IsoDescriptor make_case_descriptor(IsoCase kase, const GroupParams& src, const GroupParams& dst,
                                   const FieldElem& b2, const FieldElem& b3,
                                   const FieldElem* d1_free) {
  const long long p = src.characteristic();
  if (p != dst.characteristic() || p <= 0)
    fail(Errc::NotApplicable, "case maps need matching positive characteristic");
  if (b2.is_zero() || b3.is_zero()) fail(Errc::NotApplicable, "b2, b3 must be nonzero");
  if (src.e1 != dst.e1 || src.e2 != dst.e2 || src.e3 != dst.e3 || src.h2 != dst.h2 ||
      src.h3 != dst.h3)
    fail(Errc::NotApplicable, "case maps fix the exponent tuple");
  if (src.beta.tag != BetaTag::Zero || dst.beta.tag != BetaTag::Monomial)
    fail(Errc::NotApplicable, "case maps go from zero cocycle to monomial cocycle");
  if (src.e2 % src.e3 != 0 || src.e1 % src.e3 != 0)
    fail(Errc::NotApplicable, "case maps need e3 | e2 and e3 | e1");

  const long long r = dst.beta.r, s = dst.beta.s;
  switch (kase) {
    case IsoCase::C141:
      if (src.h2 * src.e2 != src.e3 * ipow(p, r) || src.h3 != ipow(p, s))
        fail(Errc::NotApplicable, "shape wants (h2,h3) = ((e3/e2)p^r, p^s)");
      break;
    case IsoCase::C142:
      if (src.h2 * src.e2 != src.e3 * ipow(p, s) || src.h3 != ipow(p, r))
        fail(Errc::NotApplicable, "shape wants (h2,h3) = ((e3/e2)p^s, p^r)");
      break;
    case IsoCase::C143:
      if (p != 2 || r != s) fail(Errc::NotApplicable, "square case needs char 2 and r = s");
      if (src.h2 * src.e2 != src.e3 * ipow(2, r) || src.h3 != ipow(2, r))
        fail(Errc::NotApplicable, "shape wants (h2,h3) = ((e3/e2)2^r, 2^r)");
      break;
    case IsoCase::Custom:
      fail(Errc::NotApplicable, "custom descriptors are built directly");
  }

  IsoDescriptor d;
  d.kase = kase;
  d.src = src;
  d.dst = dst;
  d.b2 = b2;
  d.b3 = b3;
  d.b1 = b2.pow(src.h2) * b3.pow(src.h3);
  d.deg1 = src.e1 / src.e3;
  d.deg2 = src.e2 / src.e3;
  const FieldCtx& ctx = b2.ctx();
  switch (kase) {
    case IsoCase::C141:
      d.d1 = b3.pow(ipow(p, r) + ipow(p, s));
      d.d2 = b3.pow(d.deg2);
      break;
    case IsoCase::C142:
      d.d1 = ctx.zero();
      d.d2 = -b3.pow(d.deg2);
      break;
    case IsoCase::C143:
      d.d1 = d1_free ? *d1_free : ctx.zero();
      d.d2 = b3.pow(d.deg2);
      break;
    default: break;
  }
  return d;
}

GroupElement iso_map(const IsoDescriptor& d, const GroupElement& g) {
  FieldElem u1 = d.b1 * g.u[0];
  if (!d.d1.is_zero()) u1 = u1 + d.d1 * g.u[2].pow(d.deg1);
  FieldElem u2 = d.b2 * g.u[1];
  if (!d.d2.is_zero()) u2 = u2 + d.d2 * g.u[2].pow(d.deg2);
  return {{u1, u2, d.b3 * g.u[2]}, g.a};
}

PointOmega iso_plane_map(const IsoDescriptor& d, const PointOmega& p) {
  // The plane shadow of the group map: lift (x,y) to (x,0,y), push through
  // the unipotent part of Phi1, re-canonicalize in the target group.
  FieldElem x = d.b1 * p.x;
  if (!d.d1.is_zero()) x = x + d.d1 * p.y.pow(d.deg1);
  FieldElem f2v = d.d1.ctx().zero();
  if (!d.d2.is_zero()) f2v = d.d2 * p.y.pow(d.deg2);
  x = x + (-f2v).pow(d.dst.h2) * (d.b3 * p.y).pow(d.dst.h3);
  return {x, d.b3 * p.y};
}

CheckResult check_iso(const IsoDescriptor& d, const FieldCtx& qctx) {
  if (!qctx.finite()) fail(Errc::NotEnumerable, "iso check needs a finite field");
  FieldTable F(qctx);
  SmallGroup Gs(d.src, F), Gd(d.dst, F);
  CheckResult res = check_iso_impl(index_descriptor(d, F), F, Gs, Gd, true);
  res.name = std::string("iso-check-") + iso_case_name(d.kase);
  return res;
}

std::optional<IsoDescriptor> search_iso(const GroupParams& src, const GroupParams& dst,
                                        const FieldCtx& qctx) {
  if (!qctx.finite()) fail(Errc::NotEnumerable, "iso search needs a finite field");
  if (src.characteristic() != qctx.characteristic() || dst.characteristic() != qctx.characteristic())
    fail(Errc::InvalidCharacteristic, "parameter tuples must live over the search field");
  if (src.e3 != dst.e3) return std::nullopt;
  const long long q = qctx.order();
  // The torus acts through a |-> a^{e_j}; over F_q only e_j mod (q-1) is
  // visible, so differing residues kill every normalized candidate.
  for (auto [e, e2] : {std::pair{src.e1, dst.e1}, {src.e2, dst.e2}, {src.e3, dst.e3}})
    if (nonneg_mod(e - e2, q - 1) != 0) return std::nullopt;

  FieldTable F(qctx);
  SmallGroup Gs(src, F), Gd(dst, F);
  const bool f1_ok = src.e1 % src.e3 == 0;
  const bool f2_ok = src.e2 % src.e3 == 0;
  const long long deg1 = f1_ok ? src.e1 / src.e3 : 0;
  const long long deg2 = f2_ok ? src.e2 / src.e3 : 0;
  const int d1_lim = f1_ok ? static_cast<int>(q) : 1;
  const int d2_lim = f2_ok ? static_cast<int>(q) : 1;

  auto tiny = generator_set(q, true);
  auto full = generator_set(q, false);
  for (int b2 = 1; b2 < q; ++b2)
    for (int b3 = 1; b3 < q; ++b3)
      for (int d1 = 0; d1 < d1_lim; ++d1)
        for (int d2 = 0; d2 < d2_lim; ++d2) {
          IndexedIso cand(F, b2, b3, d1, d2, src.h2, src.h3, deg1, deg2, dst.h2, dst.h3);
          if (!hom_on_pairs(cand, F, Gs, Gd, tiny, tiny)) continue;
          if (!hom_on_pairs(cand, F, Gs, Gd, full, full)) continue;
          if (!check_iso_impl(cand, F, Gs, Gd, true).passed()) continue;
          IsoDescriptor found;
          found.kase = IsoCase::Custom;
          found.src = src;
          found.dst = dst;
          found.b1 = F.elem(cand.b1);
          found.b2 = F.elem(b2);
          found.b3 = F.elem(b3);
          found.d1 = F.elem(d1);
          found.d2 = F.elem(d2);
          found.deg1 = deg1;
          found.deg2 = deg2;
          return found;
        }
  return std::nullopt;
}

}  // namespace imprim
