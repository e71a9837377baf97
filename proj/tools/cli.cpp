#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>

#include <CLI11.hpp>

#include "imprim/cocycle.hpp"
#include "imprim/iso.hpp"
#include "imprim/verify.hpp"

namespace imprim::cli {

namespace {

constexpr int kSchemaVersion = 1;

BetaKind to_beta(const ParamFlags& f) {
  auto tag = beta_tag_parse(f.beta);
  if (!tag) fail(Errc::InvalidIndex, "unknown beta kind: " + f.beta);
  switch (*tag) {
    case BetaTag::Zero: return BetaKind::zero();
    case BetaTag::Witt: return BetaKind::witt(f.r);
    case BetaTag::Monomial: return BetaKind::monomial(f.r, f.s);
    case BetaTag::NCm: return BetaKind::ncm(f.l2, f.l3, f.m, f.n);
    case BetaTag::NCn: return BetaKind::ncn(f.l2, f.l3, f.m, f.n);
  }
  fail(Errc::Internal, "unreachable");
}

// The field F_q of the given order, as an extension of the configured prime.
const FieldCtx& field_of_order(long long p, long long q) {
  if (p <= 0) fail(Errc::InvalidCharacteristic, "finite field orders need char > 0");
  int k = 0;
  long long t = q;
  while (t > 1 && t % p == 0) {
    t /= p;
    ++k;
  }
  if (t != 1 || k < 1) fail(Errc::InvalidExtension, "q is not a power of the characteristic");
  return shared_field(p, k);
}

struct Report {
  nlohmann::json doc;
  std::vector<CheckResult> checks;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Report(const std::string& command) {
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["params"] = nlohmann::json();
    doc["field"] = nlohmann::json();
    doc["checks"] = nlohmann::json::array();
    doc["elapsed_ms"] = 0;
  }
  void set_params(const GroupParams& gp) {
    doc["params"] = params_to_json(gp);
    doc["field"] = field_to_json(gp.field);
  }
  void add(CheckResult c) {
    doc["checks"].push_back(c.to_json());
    checks.push_back(std::move(c));
  }
  void add_prefixed(const std::string& prefix, std::vector<CheckResult> cs) {
    for (auto& c : cs) {
      c.name = prefix + c.name;
      add(std::move(c));
    }
  }
  int finish(const RunConfig& cfg) {
    // elapsed_ms stays 0 unless timing was requested, so reports are
    // byte-identical across runs.
    if (cfg.timing)
      doc["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    for (const auto& c : checks)
      if (!c.passed()) return 1;
    return 0;
  }
};

CheckResult error_check(const std::string& name, const Error& e) {
  CheckResult c{name};
  c.record_failure({{"error", errc_name(e.code())}, {"detail", e.what()}});
  return c;
}

nlohmann::json cmd_construct(const RunConfig& cfg, int* exit_code) {
  Report rep("construct");
  try {
    GroupParams gp = params_validate(to_raw(cfg.src));
    rep.set_params(gp);
    CheckResult ok{"validate"};
    ok.counts["e1"] = gp.e1;
    rep.add(std::move(ok));
    CheckResult derived{"derived-polynomials"};
    derived.witness = {{"beta", beta_poly(gp).to_string()},
                       {"psi1", psi1_poly(gp).to_string()},
                       {"psi2", psi2_poly(gp).to_string()},
                       {"label", gp.label()}};
    rep.add(std::move(derived));
  } catch (const Error& e) {
    rep.add(error_check("validate", e));
  }
  *exit_code = rep.finish(cfg);
  return rep.doc;
}

nlohmann::json cmd_verify(const RunConfig& cfg, int* exit_code) {
  Report rep("verify");
  GroupParams gp = params_validate(to_raw(cfg.src));
  rep.set_params(gp);
  std::vector<std::string> suites = cfg.suites.empty() ? std::vector<std::string>{"all"} : cfg.suites;
  for (long long q : cfg.qs) {
    const FieldCtx& qctx = field_of_order(gp.characteristic(), q);
    VerificationReport vr = verify_suite(gp, qctx, suites);
    rep.add_prefixed("q" + std::to_string(q) + ":", std::move(vr.checks));
  }
  *exit_code = rep.finish(cfg);
  return rep.doc;
}

nlohmann::json cmd_cocycle_solve(const RunConfig& cfg, int* exit_code) {
  Report rep("cocycle-solve");
  const long long p = cfg.src.chr;
  if (p <= 0) fail(Errc::InvalidCharacteristic, "cocycle solving needs char > 0");
  TargetMonomial t{ipow(p, cfg.src.l3), ipow(p, cfg.src.l2 + cfg.src.m),
                   ipow(p, cfg.src.l2 + cfg.src.n), p};
  rep.doc["field"] = field_to_json(shared_field(p, 1));
  rep.doc["params"] = {{"char", p},      {"l2", cfg.src.l2}, {"l3", cfg.src.l3},
                       {"m", cfg.src.m}, {"n", cfg.src.n},   {"target", target_poly(t, shared_field(p, 1)).to_string()}};

  CheckResult adm{"admissible-target"};
  adm.counts["A"] = t.A;
  adm.counts["B"] = t.B;
  adm.counts["C"] = t.C;
  if (!admissible_target(t))
    adm.record_failure({{"reason", "alternating sum of the target does not vanish"}});
  bool admissible = adm.passed();
  rep.add(std::move(adm));

  if (admissible) {
    Delta2Solution sol = solve_delta2(t);
    CheckResult sc{"solve"};
    sc.counts["unknowns"] = sol.unknowns;
    sc.counts["equations"] = sol.equations;
    sc.counts["rank"] = sol.rank;
    sc.counts["augmented_rank"] = sol.augmented_rank;
    if (sol.beta) {
      sc.witness = {{"beta", sol.beta->to_string()}};
      CheckResult rv{"reverify"};
      if (delta2(*sol.beta) != target_poly(t, shared_field(p, 1)))
        rv.record_failure({{"reason", "solution does not reproduce the target"}});
      rep.add(std::move(sc));
      rep.add(std::move(rv));
    } else {
      sc.status = CheckStatus::Skipped;
      sc.witness = {{"outcome", "inconsistent"}, {"rank_deficit", sol.rank_deficit()}};
      rep.add(std::move(sc));
    }
  }
  *exit_code = rep.finish(cfg);
  return rep.doc;
}

std::optional<IsoCase> iso_case_parse(const std::string& s) {
  for (IsoCase c : {IsoCase::C141, IsoCase::C142, IsoCase::C143})
    if (s == iso_case_name(c)) return c;
  return std::nullopt;
}

nlohmann::json iso_descriptor_json(const IsoDescriptor& d) {
  return {{"case", iso_case_name(d.kase)}, {"b1", d.b1.to_string()}, {"b2", d.b2.to_string()},
          {"b3", d.b3.to_string()},        {"d1", d.d1.to_string()}, {"d2", d.d2.to_string()},
          {"deg1", d.deg1},                {"deg2", d.deg2}};
}

nlohmann::json cmd_iso(const RunConfig& cfg, int* exit_code) {
  Report rep("iso");
  GroupParams src = params_validate(to_raw(cfg.src));
  GroupParams dst = params_validate(to_raw(cfg.dst));
  rep.set_params(src);
  rep.doc["params_dst"] = params_to_json(dst);

  for (long long q : cfg.qs) {
    const FieldCtx& qctx = field_of_order(src.characteristic(), q);
    const std::string prefix = "q" + std::to_string(q) + ":";
    if (cfg.kase == "search") {
      CheckResult c{prefix + "search"};
      auto found = search_iso(src, dst, qctx);
      if (found) {
        c.witness = iso_descriptor_json(*found);
        c.counts["found"] = 1;
      } else {
        c.counts["found"] = 0;
        c.witness = "none (heuristic: a finite-field miss does not prove "
                    "non-isomorphism over the closure)";
      }
      rep.add(std::move(c));
    } else {
      auto kase = iso_case_parse(cfg.kase);
      if (!kase) fail(Errc::InvalidIndex, "unknown iso case: " + cfg.kase);
      IsoDescriptor d = make_case_descriptor(*kase, src, dst, qctx.one(), qctx.one());
      CheckResult c = check_iso(d, qctx);
      c.name = prefix + c.name;
      if (c.witness.is_null()) c.witness = iso_descriptor_json(d);
      rep.add(std::move(c));
    }
  }
  *exit_code = rep.finish(cfg);
  return rep.doc;
}

// All validated tuples at the configured characteristic with exponents
// bounded by cfg.max_exponent, in deterministic order.
std::vector<GroupParams> classify_catalogue(const RunConfig& cfg) {
  const long long p = cfg.src.chr;
  const long long bound = cfg.max_exponent;
  std::vector<long long> ppowers;
  for (long long v = 1; v <= bound; v *= p) ppowers.push_back(v);
  std::vector<BetaKind> kinds = {BetaKind::zero(), BetaKind::witt(0), BetaKind::witt(1),
                                 BetaKind::monomial(0, 1), BetaKind::monomial(0, 2),
                                 BetaKind::monomial(1, 2)};
  if (p == 2) kinds.push_back(BetaKind::monomial(0, 0));
  for (long long l2 = 0; l2 <= 1; ++l2)
    for (long long l3 = 0; l3 <= 2; ++l3)
      for (long long m = 0; m <= 1; ++m)
        for (long long n = m + 1; n <= 2; ++n) {
          if (l3 - l2 == m) kinds.push_back(BetaKind::ncm(l2, l3, m, n));
          if (l3 - l2 == n) kinds.push_back(BetaKind::ncn(l2, l3, m, n));
        }

  std::vector<GroupParams> out;
  std::vector<std::string> labels;
  auto push = [&](const RawParams& raw) {
    try {
      GroupParams gp = params_validate(raw);
      if (gp.e1 > bound * bound || gp.e2 > bound * bound) return;
      std::string l = gp.label();
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) {
        labels.push_back(l);
        out.push_back(std::move(gp));
      }
    } catch (const Error&) {
    }
  };
  for (const BetaKind& kind : kinds)
    for (long long e3 : ppowers)
      for (long long h2 : ppowers)
        for (long long h3 : ppowers) {
          RawParams raw;
          raw.field = shared_field(p, 1);
          raw.e3 = e3;
          raw.h2 = h2;
          raw.h3 = h3;
          raw.beta = kind;
          raw.allow_equal_exponents = cfg.src.allow_equal || (p == 2 && kind.tag == BetaTag::Monomial &&
                                                              kind.r == kind.s);
          if (kind.tag == BetaTag::Zero) {
            for (long long e2 = 1; e2 <= bound; ++e2) {
              raw.e2 = e2;
              push(raw);
            }
          } else {
            raw.e2.reset();
            push(raw);
          }
        }
  return out;
}

nlohmann::json cmd_classify(const RunConfig& cfg, int* exit_code) {
  Report rep("classify");
  if (cfg.src.chr <= 0) fail(Errc::InvalidCharacteristic, "classify needs char > 0");
  rep.doc["field"] = field_to_json(shared_field(cfg.src.chr, 1));
  rep.doc["params"] = {{"char", cfg.src.chr}, {"max_exponent", cfg.max_exponent}};
  const long long q = cfg.qs.empty() ? cfg.src.chr : cfg.qs.front();
  const FieldCtx& qctx = field_of_order(cfg.src.chr, q);

  std::vector<GroupParams> cat = classify_catalogue(cfg);
  std::vector<size_t> parent(cat.size());
  std::iota(parent.begin(), parent.end(), size_t{0});
  std::function<size_t(size_t)> find = [&](size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  long long searches = 0;
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j) {
      if (find(i) == find(j)) continue;
      ++searches;
      if (search_iso(cat[i], cat[j], qctx)) parent[find(j)] = find(i);
    }

  std::map<size_t, std::vector<std::string>> classes;
  for (size_t i = 0; i < cat.size(); ++i) classes[find(i)].push_back(cat[i].label());
  nlohmann::json census = nlohmann::json::array();
  for (auto& [root, members] : classes)
    census.push_back({{"representative", cat[root].label()}, {"members", members}});

  CheckResult c{"census"};
  c.counts["tuples"] = static_cast<long long>(cat.size());
  c.counts["classes"] = static_cast<long long>(classes.size());
  c.counts["searches"] = searches;
  c.counts["q"] = q;
  c.witness = {{"classes", census},
               {"note", "merges certified by explicit maps; separations are heuristic over F_q"}};
  rep.add(std::move(c));
  *exit_code = rep.finish(cfg);
  return rep.doc;
}

void add_param_flags(CLI::App* app, ParamFlags& f, const std::string& prefix) {
  auto name = [&prefix](const char* base) { return "--" + prefix + std::string(base); };
  app->add_option(name("char"), f.chr, "field characteristic (0 = rationals)");
  app->add_option(name("ext"), f.ext, "extension degree of the base field");
  app->add_option(name("e2"), f.e2, "torus exponent e2");
  app->add_option(name("e3"), f.e3, "torus exponent e3");
  app->add_option(name("h2"), f.h2, "p-power exponent h2");
  app->add_option(name("h3"), f.h3, "p-power exponent h3");
  app->add_option(name("beta"), f.beta, "cocycle kind")
      ->check(CLI::IsMember({"zero", "witt", "monomial", "ncm", "ncn"}));
  app->add_option(name("r"), f.r, "cocycle exponent r");
  app->add_option(name("s"), f.s, "cocycle exponent s");
  app->add_option(name("l2"), f.l2, "exponent l2");
  app->add_option(name("l3"), f.l3, "exponent l3");
  app->add_option(name("m"), f.m, "exponent m");
  app->add_option(name("n"), f.n, "exponent n");
  app->add_flag(name("allow-equal-exponents"), f.allow_equal,
                "tolerate r = s for monomial cocycles in characteristic 2");
}

}  // namespace

RawParams to_raw(const ParamFlags& f) {
  RawParams raw;
  raw.field = shared_field(f.chr, f.ext);
  raw.e2 = f.e2;
  raw.e3 = f.e3;
  raw.h2 = f.h2;
  raw.h3 = f.h3;
  raw.beta = to_beta(f);
  raw.allow_equal_exponents = f.allow_equal;
  return raw;
}

nlohmann::json run(const RunConfig& cfg, int* exit_code) {
  if (cfg.command == "construct") return cmd_construct(cfg, exit_code);
  if (cfg.command == "verify") return cmd_verify(cfg, exit_code);
  if (cfg.command == "cocycle-solve") return cmd_cocycle_solve(cfg, exit_code);
  if (cfg.command == "iso") return cmd_iso(cfg, exit_code);
  if (cfg.command == "classify") return cmd_classify(cfg, exit_code);
  fail(Errc::InvalidIndex, "unknown command: " + cfg.command);
}

int main_entry(int argc, const char* const* argv) {
  CLI::App app{"construct and verify the classified family of (2,2)-imprimitive "
               "transformation groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string dump_config;

  // Config files are only processed by the top-level parser; subcommand flags
  // live in a [subcommand] section of the file.
  app.set_config("--config", "", "read flags from a config file");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "write the JSON report to this file");
    sub->add_flag("--pretty", cfg.pretty, "indent the JSON report");
    sub->add_flag("--timing", cfg.timing, "record wall time (breaks byte determinism)");
    sub->add_option("--dump-config", dump_config, "write the effective config to this file");
  };

  CLI::App* construct = app.add_subcommand("construct", "validate a parameter tuple");
  add_param_flags(construct, cfg.src, "");
  add_common(construct);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites over finite fields");
  add_param_flags(verify, cfg.src, "");
  verify->add_option("--q", cfg.qs, "field orders (repeatable)")->required();
  verify->add_option("--suite", cfg.suites, "suites to run (repeatable; default all)");
  add_common(verify);

  CLI::App* cocycle = app.add_subcommand("cocycle-solve", "solve the cocycle equation");
  add_param_flags(cocycle, cfg.src, "");
  add_common(cocycle);

  CLI::App* iso = app.add_subcommand("iso", "check or search plane-compatible isomorphisms");
  add_param_flags(iso, cfg.src, "");
  add_param_flags(iso, cfg.dst, "dst-");
  iso->add_option("--q", cfg.qs, "field orders (repeatable)")->required();
  iso->add_option("--case", cfg.kase, "named map shape, or 'search'");
  add_common(iso);

  CLI::App* classify = app.add_subcommand("classify", "census of tuples up to isomorphism");
  add_param_flags(classify, cfg.src, "");
  classify->add_option("--q", cfg.qs, "field order used by the search");
  classify->add_option("--max-exponent", cfg.max_exponent, "exponent bound for the census");
  add_common(classify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  cfg.command = app.get_subcommands().front()->get_name();

  if (!dump_config.empty()) {
    std::ofstream os(dump_config);
    os << app.config_to_str(false, false);
  }

  int exit_code = 0;
  nlohmann::json doc;
  try {
    doc = run(cfg, &exit_code);
  } catch (const Error& e) {
    doc = {{"schema_version", kSchemaVersion},
           {"command", cfg.command},
           {"error", {{"code", errc_name(e.code())}, {"detail", e.what()}}}};
    exit_code = 2;
  }
  const std::string text = cfg.pretty ? doc.dump(2) + "\n" : doc.dump() + "\n";
  if (!cfg.out.empty()) {
    std::ofstream os(cfg.out, std::ios::binary);
    os << text;
  } else {
    std::cout << text;
  }
  return exit_code;
}

}  // namespace imprim::cli
