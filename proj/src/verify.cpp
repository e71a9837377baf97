#include "imprim/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace imprim {

namespace {

nlohmann::json elt_json(const SmallGroup& G, const SmallGroup::Elt& g) {
  const FieldTable& F = G.field();
  return {{"u1", F.elem(g.u1).to_string()},
          {"u2", F.elem(g.u2).to_string()},
          {"u3", F.elem(g.u3).to_string()},
          {"a", F.elem(g.a).to_string()}};
}

nlohmann::json point_json(const SmallGroup& G, int pt) {
  const FieldTable& F = G.field();
  return {{"x", F.elem(G.point_x(pt)).to_string()}, {"y", F.elem(G.point_y(pt)).to_string()}};
}

using EltSet = std::set<long long>;

EltSet collect(const SmallGroup& G, const std::function<bool(const SmallGroup::Elt&)>& pred) {
  EltSet s;
  for (long long i = 0; i < G.size(); ++i)
    if (pred(G.element(i))) s.insert(i);
  return s;
}

bool is_identity_perm(const std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

long long nonneg_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Deterministic splitmix64; seeds the sampled action-law check.
uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<GroupElement> enumerate_group(const GroupLaw& law) {
  const FieldCtx& ctx = law.ctx();
  if (!ctx.finite()) fail(Errc::NotEnumerable, "group enumeration needs a finite field");
  const long long q = ctx.order();
  std::vector<GroupElement> out;
  out.reserve(q * q * q * (q - 1));
  for (long long u1 = 0; u1 < q; ++u1)
    for (long long u2 = 0; u2 < q; ++u2)
      for (long long u3 = 0; u3 < q; ++u3)
        for (long long a = 1; a < q; ++a)
          out.push_back({{ctx.from_index(u1), ctx.from_index(u2), ctx.from_index(u3)},
                         ctx.from_index(a)});
  return out;
}

CheckResult check_counts(const SmallGroup& G) {
  CheckResult r{"counts"};
  const long long q = G.q();
  r.counts["q"] = q;
  r.counts["group_order"] = G.size();
  r.counts["omega"] = q * q;
  r.counts["blocks"] = q;
  r.counts["lambda"] = q * q * q * (q - 1);
  for (long long i = 0; i < G.size(); ++i) {
    if (G.index(G.element(i)) != i) {
      r.record_failure({{"bad_index", i}});
      break;
    }
  }
  return r;
}

CheckResult check_sharply_2transitive(const std::vector<std::vector<int>>& perms, long long q,
                                      const std::string& name) {
  CheckResult r{name};
  r.counts["degree"] = q;
  r.counts["permutations"] = static_cast<long long>(perms.size());
  r.counts["expected"] = q * (q - 1);
  if (static_cast<long long>(perms.size()) != q * (q - 1))
    r.record_failure({{"reason", "wrong order"}});
  std::set<std::pair<int, int>> pair_images;
  for (const auto& pi : perms) {
    std::vector<char> seen(q, 0);
    for (int v : pi) seen[v] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      r.record_failure({{"reason", "not a permutation"}});
      return r;
    }
    if (q >= 2 && !pair_images.insert({pi[0], pi[1]}).second)
      r.record_failure(
          {{"reason", "two permutations agree on the base pair"}, {"image", {pi[0], pi[1]}}});
  }
  r.counts["distinct_pair_images"] = static_cast<long long>(pair_images.size());
  if (static_cast<long long>(pair_images.size()) != q * (q - 1))
    r.record_failure({{"reason", "not transitive on ordered pairs"}});
  return r;
}

std::vector<CheckResult> check_block_axioms(const SmallGroup& G) {
  std::vector<CheckResult> out;
  const long long q = G.q();

  CheckResult compat{"blocks-permuted"};
  long long checked = 0;
  for (long long i = 0; i < G.size() && compat.passed(); ++i) {
    const auto g = G.element(i);
    for (int pt = 0; pt < G.num_points(); ++pt) {
      ++checked;
      if (G.point_y(G.act_point(g, pt)) != G.act_block(g, G.point_y(pt))) {
        compat.record_failure({{"g", elt_json(G, g)}, {"point", point_json(G, pt)}});
        break;
      }
    }
  }
  compat.counts["pairs_checked"] = checked;
  out.push_back(std::move(compat));

  std::set<std::vector<int>> perm_set;
  for (long long i = 0; i < G.size(); ++i) perm_set.insert(G.block_perm(G.element(i)));
  std::vector<std::vector<int>> perms(perm_set.begin(), perm_set.end());
  out.push_back(check_sharply_2transitive(perms, q, "block-group-sharply-2-transitive"));

  // G_Delta = inertia * G_O for Delta the block y = 0 and O the origin.
  CheckResult fact{"normalizer-factorization"};
  const int O = G.point(0, 0);
  EltSet inertia = collect(G, [&](const SmallGroup::Elt& g) {
    for (int b = 0; b < q; ++b)
      if (G.act_block(g, b) != b) return false;
    return true;
  });
  EltSet g_delta = collect(G, [&](const SmallGroup::Elt& g) { return G.act_block(g, 0) == 0; });
  EltSet g_O = collect(G, [&](const SmallGroup::Elt& g) { return G.act_point(g, O) == O; });
  EltSet product;
  for (long long i : inertia)
    for (long long s : g_O) product.insert(G.index(G.mul(G.element(i), G.element(s))));
  fact.counts["inertia"] = static_cast<long long>(inertia.size());
  fact.counts["g_delta"] = static_cast<long long>(g_delta.size());
  fact.counts["stabilizer"] = static_cast<long long>(g_O.size());
  if (product != g_delta) fact.record_failure({{"reason", "inertia * G_O differs from G_Delta"}});
  if (static_cast<long long>(g_O.size()) != q * (q - 1))
    fact.record_failure({{"reason", "point stabilizer order is not q(q-1)"}});
  out.push_back(std::move(fact));
  return out;
}

std::vector<CheckResult> check_in_block(const SmallGroup& G) {
  std::vector<CheckResult> out;
  const FieldTable& F = G.field();
  const long long q = G.q();
  const long long e1 = G.params().e1;

  // Induced maps of G_Delta on the block y = 0.
  std::set<std::vector<int>> induced;
  for (long long i = 0; i < G.size(); ++i) {
    const auto g = G.element(i);
    if (G.act_block(g, 0) != 0) continue;
    std::vector<int> img(q);
    for (int x = 0; x < q; ++x) img[x] = G.point_x(G.act_point(g, G.point(x, 0)));
    induced.insert(std::move(img));
  }

  std::set<std::vector<int>> expected;
  for (int u1 = 0; u1 < q; ++u1)
    for (int a = 1; a < q; ++a) {
      const int c = F.pow(a, e1);
      std::vector<int> img(q);
      for (int x = 0; x < q; ++x) img[x] = F.add(u1, F.mul(c, x));
      expected.insert(std::move(img));
    }

  CheckResult shape{"inblock-induced-shape"};
  shape.counts["induced_order"] = static_cast<long long>(induced.size());
  if (induced != expected)
    shape.record_failure({{"reason", "induced group differs from {x -> u1 + a^e1 x}"}});
  out.push_back(std::move(shape));

  CheckResult trans{"inblock-transitive"};
  std::set<int> orbit0;
  for (const auto& img : induced) orbit0.insert(img[0]);
  trans.counts["orbit_of_zero"] = static_cast<long long>(orbit0.size());
  if (static_cast<long long>(orbit0.size()) != q)
    trans.record_failure({{"reason", "not transitive on the block"}});
  out.push_back(std::move(trans));

  const long long g1 = std::gcd(nonneg_mod(e1, q - 1), q - 1);
  CheckResult mult{"inblock-multiplier-order"};
  long long stab0 = 0;
  for (const auto& img : induced)
    if (img[0] == 0) ++stab0;
  mult.counts["stabilizer_order"] = stab0;
  mult.counts["expected"] = (q - 1) / g1;
  mult.counts["gcd_e1_qm1"] = g1;
  if (stab0 != (q - 1) / g1) mult.record_failure({{"reason", "multiplier subgroup order mismatch"}});
  out.push_back(std::move(mult));

  if (g1 == 1) {
    out.push_back(check_sharply_2transitive({induced.begin(), induced.end()}, q,
                                            "inblock-sharply-2-transitive"));
  } else {
    CheckResult skip{"inblock-sharply-2-transitive"};
    skip.status = CheckStatus::Skipped;
    skip.counts["gcd_e1_qm1"] = g1;
    skip.witness = "closure-only property: a -> a^e1 is not onto F_q*";
    out.push_back(std::move(skip));
  }
  return out;
}

std::vector<CheckResult> check_lambda_sharp(const SmallGroup& G, bool unipotent_only) {
  std::vector<CheckResult> out;
  const long long q = G.q();
  const long long lambda = q * q * q * (q - 1);
  const int X0 = G.point(0, 0), Y0 = G.point(0, 1);

  CheckResult freeness{"lambda-freeness"};
  for (long long i = 0; i < G.size() && freeness.passed(); ++i) {
    const auto g = G.element(i);
    if (unipotent_only && g.a != 1) continue;
    if (g == G.identity()) continue;
    int fixed_block = -1;
    for (int pt = 0; pt < G.num_points(); ++pt) {
      if (G.act_point(g, pt) != pt) continue;
      const int b = G.point_y(pt);
      if (fixed_block == -1) {
        fixed_block = b;
      } else if (fixed_block != b) {
        freeness.record_failure({{"g", elt_json(G, g)}, {"fixed_point", point_json(G, pt)}});
        break;
      }
    }
  }
  out.push_back(std::move(freeness));

  CheckResult trans{"lambda-sharp-transitivity"};
  std::vector<char> seen(G.num_points() * G.num_points(), 0);
  long long distinct = 0;
  for (long long i = 0; i < G.size(); ++i) {
    const auto g = G.element(i);
    if (unipotent_only && g.a != 1) continue;
    const int a = G.act_point(g, X0), b = G.act_point(g, Y0);
    const long long key = static_cast<long long>(a) * G.num_points() + b;
    if (seen[key]) {
      trans.record_failure({{"reason", "two elements move the base pair identically"},
                           {"g", elt_json(G, g)}});
      continue;
    }
    seen[key] = 1;
    ++distinct;
  }
  trans.counts["group_order"] = unipotent_only ? q * q * q : G.size();
  trans.counts["lambda"] = lambda;
  trans.counts["orbit_size"] = distinct;
  if (distinct != lambda)
    trans.record_failure({{"reason", "orbit of the base pair does not cover Lambda"}});
  out.push_back(std::move(trans));
  return out;
}

std::vector<CheckResult> check_structure(const SmallGroup& G) {
  std::vector<CheckResult> out;
  const long long q = G.q();
  const long long p = G.params().characteristic();
  const int O = G.point(0, 0), Y = G.point(0, 1);

  EltSet inertia = collect(G, [&](const SmallGroup::Elt& g) {
    for (int b = 0; b < q; ++b)
      if (G.act_block(g, b) != b) return false;
    return true;
  });
  CheckResult ishape{"inertia-shape"};
  ishape.counts["order"] = static_cast<long long>(inertia.size());
  ishape.counts["expected"] = q * q;
  for (long long i : inertia) {
    const auto g = G.element(i);
    if (g.u3 != 0 || g.a != 1) {
      ishape.record_failure({{"g", elt_json(G, g)}});
      break;
    }
  }
  if (static_cast<long long>(inertia.size()) != q * q)
    ishape.record_failure({{"reason", "inertia order is not q^2"}});
  out.push_back(std::move(ishape));

  // Centre of G_u by brute-force centralizer computation.
  std::vector<SmallGroup::Elt> gu;
  for (long long i = 0; i < G.size(); ++i) {
    auto g = G.element(i);
    if (g.a == 1) gu.push_back(g);
  }
  EltSet centre;
  for (const auto& z : gu) {
    bool central = true;
    for (const auto& u : gu) {
      if (!(G.mul(z, u) == G.mul(u, z))) {
        central = false;
        break;
      }
    }
    if (central) centre.insert(G.index(z));
  }
  CheckResult cshape{"centre-shape"};
  cshape.counts["order"] = static_cast<long long>(centre.size());
  cshape.counts["expected"] = q;
  for (long long i : centre) {
    const auto g = G.element(i);
    if (g.u2 != 0 || g.u3 != 0 || g.a != 1) {
      cshape.record_failure({{"g", elt_json(G, g)}});
      break;
    }
  }
  if (static_cast<long long>(centre.size()) != q)
    cshape.record_failure({{"reason", "centre order is not q"}});
  out.push_back(std::move(cshape));

  auto unique_factorization = [&](const EltSet& whole, const EltSet& left, const EltSet& right,
                                  const std::string& name) {
    CheckResult r{name};
    std::map<long long, long long> times;
    for (long long i : left)
      for (long long j : right) ++times[G.index(G.mul(G.element(i), G.element(j)))];
    r.counts["left"] = static_cast<long long>(left.size());
    r.counts["right"] = static_cast<long long>(right.size());
    r.counts["whole"] = static_cast<long long>(whole.size());
    for (long long i : whole) {
      auto it = times.find(i);
      if (it == times.end() || it->second != 1) {
        r.record_failure({{"g", elt_json(G, G.element(i))},
                          {"factorizations", it == times.end() ? 0 : it->second}});
        break;
      }
    }
    if (times.size() != whole.size())
      r.record_failure({{"reason", "product set leaves the target subgroup"}});
    return r;
  };

  EltSet stab_inertia_O, stab_inertia_Y;
  for (long long i : inertia) {
    if (G.act_point(G.element(i), O) == O) stab_inertia_O.insert(i);
    if (G.act_point(G.element(i), Y) == Y) stab_inertia_Y.insert(i);
  }
  out.push_back(unique_factorization(inertia, centre, stab_inertia_O, "inertia-centre-product"));
  out.push_back(
      unique_factorization(inertia, stab_inertia_O, stab_inertia_Y, "inertia-XY-product"));

  // Transversal L = {(x1, 0, x3)}.  L is a subgroup exactly when the
  // quotient of G_u by its centre is commutative: for those kinds we verify
  // closure, normality (under all of G, so torus-invariance included) and the
  // complement factorization; for the noncommutative kinds we verify that L
  // fails to be closed.
  CheckResult lres{"transversal-L"};
  EltSet L, slice2, guset;
  for (const auto& g : gu) {
    guset.insert(G.index(g));
    if (g.u2 == 0) L.insert(G.index(g));
    if (g.u1 == 0 && g.u3 == 0) slice2.insert(G.index(g));
  }
  lres.counts["order"] = static_cast<long long>(L.size());
  if (G.params().beta.noncommutative()) {
    bool escapes = false;
    for (long long i : L) {
      for (long long j : L)
        if (!L.count(G.index(G.mul(G.element(i), G.element(j))))) {
          escapes = true;
          break;
        }
      if (escapes) break;
    }
    if (!escapes)
      lres.record_failure({{"reason", "L unexpectedly closed for a noncommutative kind"}});
    out.push_back(std::move(lres));
  } else {
    for (long long i : L) {
      for (long long j : L) {
        if (!L.count(G.index(G.mul(G.element(i), G.element(j))))) {
          lres.record_failure({{"reason", "L not closed under multiplication"}});
          break;
        }
      }
      if (!L.count(G.index(G.inv(G.element(i))))) lres.record_failure({{"reason", "L not closed under inversion"}});
      if (!lres.passed()) break;
    }
    for (long long gi = 0; gi < G.size() && lres.passed(); ++gi) {
      const auto g = G.element(gi);
      const auto ginv = G.inv(g);
      for (long long li : L) {
        if (!L.count(G.index(G.mul(G.mul(g, G.element(li)), ginv)))) {
          lres.record_failure({{"reason", "L not normal"}, {"g", elt_json(G, g)}});
          break;
        }
      }
    }
    out.push_back(std::move(lres));
    out.push_back(unique_factorization(guset, L, slice2, "unipotent-L-complement"));
  }

  if (!G.params().beta.noncommutative()) {
    CheckResult vec{"quotient-vector-group"};
    for (const auto& u : gu) {
      auto power = G.identity();
      for (long long i = 0; i < p; ++i) power = G.mul(power, u);
      if (!centre.count(G.index(power))) {
        vec.record_failure({{"u", elt_json(G, u)}, {"reason", "p-th power not central"}});
        break;
      }
    }
    out.push_back(std::move(vec));
  } else {
    CheckResult ncw{"quotient-noncommutative-witness"};
    bool found = false;
    for (const auto& u : gu) {
      for (const auto& v : gu) {
        const auto comm = G.mul(G.mul(u, v), G.inv(G.mul(v, u)));
        if (!centre.count(G.index(comm))) {
          ncw.witness = {{"u", elt_json(G, u)}, {"v", elt_json(G, v)}};
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      // psi2(x,y) = x^{p^m} y^{p^n} agrees with psi2(y,x) as a function on
      // F_q exactly when (q-1) | p^n - p^m; in that case the field is too
      // small to witness the noncommutativity of the quotient.
      const auto& b = G.params().beta;
      const long long gap = ipow(p, b.n) - ipow(p, b.m);
      if ((q - 1) > 0 && gap % (q - 1) == 0) {
        ncw.status = CheckStatus::Skipped;
        ncw.witness = "field too small: psi2 is symmetric as a function on F_q";
      } else {
        ncw.record_failure({{"reason", "G_u / centre unexpectedly commutative"}});
      }
    }
    out.push_back(std::move(ncw));
  }

  CheckResult frob{"frobenius-block-quotient"};
  std::set<std::vector<int>> perms;
  for (long long i = 0; i < G.size(); ++i) perms.insert(G.block_perm(G.element(i)));
  for (const auto& pi : perms) {
    if (is_identity_perm(pi)) continue;
    int fixed = 0;
    for (long long b = 0; b < q; ++b)
      if (pi[b] == b) ++fixed;
    if (fixed > 1) {
      frob.record_failure({{"reason", "a non-identity block permutation fixes two blocks"}});
      break;
    }
  }
  frob.counts["block_group_order"] = static_cast<long long>(perms.size());
  out.push_back(std::move(frob));
  return out;
}

std::vector<CheckResult> check_action_axioms(const SmallGroup& G, long long min_samples) {
  std::vector<CheckResult> out;
  const long long n = G.size();

  std::vector<std::vector<int>> perm(n);
  for (long long i = 0; i < n; ++i) perm[i] = G.point_perm(G.element(i));

  CheckResult wf{"action-wellformed"};
  for (long long i = 0; i < n && wf.passed(); ++i) {
    std::vector<char> seen(G.num_points(), 0);
    for (int v : perm[i]) seen[v] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      wf.record_failure({{"g", elt_json(G, G.element(i))}, {"reason", "not a bijection"}});
  }
  out.push_back(std::move(wf));

  CheckResult law{"left-action-law"};
  if (n <= 600) {
    long long triples = 0;
    for (long long i = 0; i < n && law.passed(); ++i) {
      const auto g = G.element(i);
      for (long long j = 0; j < n; ++j) {
        const auto h = G.element(j);
        const auto& pgh = perm[G.index(G.mul(g, h))];
        const auto& pg = perm[i];
        const auto& ph = perm[j];
        for (int pt = 0; pt < G.num_points(); ++pt) {
          ++triples;
          if (pgh[pt] != pg[ph[pt]]) {
            law.record_failure(
                {{"g", elt_json(G, g)}, {"h", elt_json(G, h)}, {"point", point_json(G, pt)}});
            break;
          }
        }
        if (!law.passed()) break;
      }
    }
    law.counts["triples_checked"] = triples;
  } else {
    uint64_t state = 0x1234abcd5678ef01ULL;
    long long triples = 0;
    for (long long s = 0; s < min_samples && law.passed(); ++s) {
      const auto g = G.element(static_cast<long long>(splitmix64(state) % n));
      const auto h = G.element(static_cast<long long>(splitmix64(state) % n));
      const int pt = static_cast<int>(splitmix64(state) % G.num_points());
      ++triples;
      if (G.act_point(G.mul(g, h), pt) != G.act_point(g, G.act_point(h, pt)))
        law.record_failure(
            {{"g", elt_json(G, g)}, {"h", elt_json(G, h)}, {"point", point_json(G, pt)}});
    }
    law.counts["triples_checked"] = triples;
    law.counts["sampled"] = 1;
  }
  out.push_back(std::move(law));

  CheckResult equi{"block-equivariance"};
  long long pairs = 0;
  for (long long i = 0; i < n && equi.passed(); ++i) {
    const auto g = G.element(i);
    for (int pt = 0; pt < G.num_points(); ++pt) {
      ++pairs;
      if (G.point_y(perm[i][pt]) != G.act_block(g, G.point_y(pt))) {
        equi.record_failure({{"g", elt_json(G, g)}, {"point", point_json(G, pt)}});
        break;
      }
    }
  }
  equi.counts["pairs_checked"] = pairs;
  out.push_back(std::move(equi));

  CheckResult eff{"effectiveness"};
  long long trivial = 0;
  for (long long i = 0; i < n; ++i) {
    if (!is_identity_perm(perm[i])) continue;
    ++trivial;
    if (!(G.element(i) == G.identity()))
      eff.record_failure({{"g", elt_json(G, G.element(i))}, {"reason", "acts trivially"}});
  }
  eff.counts["trivial_actors"] = trivial;
  out.push_back(std::move(eff));
  return out;
}

CheckResult check_associativity(const GroupParams& gp) {
  CheckResult r{"associativity-symbolic"};
  const auto w = assoc_witness(gp);
  for (int i = 0; i < 3; ++i) {
    r.counts["coord" + std::to_string(i + 1) + "_terms"] =
        static_cast<long long>(w[i].terms().size());
    if (!w[i].is_zero())
      r.record_failure({{"coordinate", i + 1}, {"associator", w[i].to_string()}});
  }
  return r;
}

VerificationReport verify_suite(const GroupParams& gp, const FieldCtx& qctx,
                                const std::vector<std::string>& suites) {
  VerificationReport rep;
  rep.params_echo = params_to_json(gp);
  rep.field = field_to_json(qctx);
  auto wants = [&](const std::string& s) {
    for (const auto& w : suites)
      if (w == s || w == "all") return true;
    return false;
  };
  if (wants("assoc")) rep.checks.push_back(check_associativity(gp));
  const bool needs_enum = wants("action") || wants("blocks") || wants("inblock") ||
                          wants("lambda") || wants("structure");
  if (!needs_enum) return rep;
  if (!qctx.finite()) fail(Errc::NotEnumerable, "enumeration suites need a finite field");
  FieldTable table(qctx);
  SmallGroup G(gp, table);
  rep.checks.push_back(check_counts(G));
  auto append = [&](std::vector<CheckResult> rs) {
    for (auto& r : rs) rep.checks.push_back(std::move(r));
  };
  if (wants("action")) append(check_action_axioms(G));
  if (wants("blocks")) append(check_block_axioms(G));
  if (wants("inblock")) append(check_in_block(G));
  if (wants("lambda")) append(check_lambda_sharp(G));
  if (wants("structure")) append(check_structure(G));
  return rep;
}

}  // namespace imprim
