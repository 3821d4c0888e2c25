// Acceptance gate: one PASS/FAIL line per criterion.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ftd/atlas.h"
#include "ftd/autsearch.h"
#include "ftd/catalog.h"
#include "ftd/design.h"
#include "ftd/field.h"
#include "ftd/suzuki.h"

namespace {

using namespace ftd;
using Clock = std::chrono::steady_clock;

struct Gate {
  std::set<std::string> failed;

  void line(const std::string& id, bool pass, double seconds, const std::string& what, const std::string& detail) {
    if (!pass) failed.insert(id);
    std::printf("%s  %-3s %-48s %7.2fs  %s\n", pass ? "PASS" : "FAIL", id.c_str(), what.c_str(), seconds,
                detail.c_str());
    std::fflush(stdout);
  }
};

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string params_str(const Design& d, const LambdaReport& lam) {
  std::ostringstream o;
  o << "2-(" << d.v() << "," << d.k << "," << (lam.ok ? std::to_string(lam.lambda) : std::string("?")) << ") r="
    << d.r() << " b=" << d.b();
  return o.str();
}

struct Built {
  Design design;
  LambdaReport lambda;
  FlagReport flag;
};

Built build_and_verify(const GenGroup& g0, const Block& base, unsigned threads) {
  const GenGroup g = affine_closure(g0);
  Built b{build_design(base, g), {}, {}};
  b.lambda = verify_2design(b.design, VerifyMode::kOrbitwise, &g0, threads);
  b.flag = check_flag_transitive(b.design, g);
  return b;
}

bool has_params(const Built& b, std::uint64_t v, std::uint64_t k, std::uint64_t lambda, std::uint64_t r,
                std::uint64_t nb) {
  return b.lambda.ok && b.design.v() == v && b.design.k == k && b.lambda.lambda == lambda && b.design.r() == r &&
         b.design.b() == nb;
}

Block span(const FieldPtr& f, const std::vector<std::vector<Elem>>& rows, std::uint32_t d) {
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.emplace_back(f, r);
  return canonical_subspace(vs, d).elements();
}

void criterion1(Gate& gate, unsigned threads) {
  for (auto [q, v, k, lam, r, b] : std::vector<std::array<std::uint64_t, 6>>{{4, 16, 4, 2, 10, 40},
                                                                             {9, 81, 9, 3, 30, 270}}) {
    const auto t0 = Clock::now();
    const GenGroup g0 = atlas("SL2", {.q = static_cast<std::uint32_t>(q)});
    const auto& f = g0.field;
    const Built x = build_and_verify(g0, span(f, {{1, 0}, {0, 1}}, f->h() / 2), threads);
    const double s = since(t0);
    const bool ok = has_params(x, v, k, lam, r, b) && x.flag.flag_transitive && s < 1.0;
    gate.line(q == 4 ? "1a" : "1b", ok, s, "SL2(" + std::to_string(q) + ") subfield plane",
              params_str(x.design, x.lambda) + (x.flag.flag_transitive ? " flag-transitive" : " not flag-transitive"));
  }
}

void criterion2(Gate& gate, unsigned threads) {
  for (auto [q, v, k, lam, r, b] : std::vector<std::array<std::uint64_t, 6>>{{2, 16, 4, 4, 20, 80},
                                                                             {3, 81, 9, 9, 90, 810}}) {
    const auto t0 = Clock::now();
    const GenGroup g0 = atlas("Sp4", {.q = static_cast<std::uint32_t>(q)});
    const auto& f = g0.field;
    const Built x = build_and_verify(g0, span(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}, f->h()), threads);
    const double s = since(t0);
    const bool ok = has_params(x, v, k, lam, r, b) && x.flag.flag_transitive && s < 5.0;
    gate.line(q == 2 ? "2a" : "2b", ok, s, "Sp4(" + std::to_string(q) + ") line <e1,e2>",
              params_str(x.design, x.lambda) + (x.flag.flag_transitive ? " flag-transitive" : " not flag-transitive"));
  }
}

void criterion3(Gate& gate, unsigned threads) {
  const auto t0 = Clock::now();
  const GenGroup g0 = atlas("SU3", {.s = 3});
  const auto& f = g0.field;
  const Built x = build_and_verify(g0, span(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 1), threads);
  const TacticalReport tac = tactical_counts(x.design, g0);
  const double s = since(t0);
  std::map<std::uint64_t, std::uint64_t> rows;
  std::ostringstream o;
  o << params_str(x.design, x.lambda) << " tactical";
  for (const auto& row : tac.rows) {
    rows[row.orbit_size] += row.meet;
    o << " (" << row.orbit_size << "," << row.meet << ")";
  }
  o << " ratio " << tac.ratio;
  if (!x.lambda.ok && x.lambda.pair_a && x.lambda.pair_b) {
    o << "; pairs (" << x.lambda.pair_a->first << "," << x.lambda.pair_a->second << ")=" << x.lambda.count_a << " vs ("
      << x.lambda.pair_b->first << "," << x.lambda.pair_b->second << ")=" << x.lambda.count_b;
  }
  const std::map<std::uint64_t, std::uint64_t> want{{224, 8}, {504, 18}};
  const bool ok = has_params(x, 729, 27, 9, 252, 6804) && rows == want && tac.ratio == 28 && s < 60.0;
  gate.line("3", ok, s, "SU3(3) Baer subspace GF(3)^3", o.str());
}

void criterion4(Gate& gate, unsigned threads) {
  const auto t_all = Clock::now();
  const SuzukiContext ctx = make_suzuki_context(8);
  const GenGroup& g0 = ctx.sz;
  const Elem w = ctx.field->primitive();
  const SuzukiTuple fam3{1, 1, w, ctx.field->mul(ctx.field->suzuki_sigma(w), w)};
  std::vector<std::size_t> meets;
  struct Want {
    const char* id;
    SuzukiTuple tup;
    Family fam;
    std::uint64_t lambda;
  };
  for (const Want& c : {Want{"4a", {1, 0, 1, 0}, Family::kFamily1, 8}, Want{"4b", {1, 1, 1, 1}, Family::kFamily2, 32},
                        Want{"4c", fam3, Family::kFamily3, 64}}) {
    const auto t0 = Clock::now();
    const Subspace b = family_block(8, c.tup);
    meets.push_back(ovoid_meet(b, ctx));
    const Built x = build_and_verify(g0, b.elements(), threads);
    bool ok = classify_family(8, c.tup) == c.fam && has_params(x, 4096, 64, c.lambda, c.lambda * 65, 64 * c.lambda * 65);
    std::string extra;
    if (c.fam == Family::kFamily1) {
      const bool tangent = tangency_check(b, ctx).verdict == Tangency::kTangentNotInSpread;
      ok = ok && tangent;
      extra = tangent ? " tangent-not-in-spread" : " NOT tangent-not-in-spread";
    }
    std::ostringstream name;
    name << to_string(c.fam) << " (" << c.tup.x0 << "," << c.tup.y0 << "," << c.tup.z0 << "," << c.tup.t0 << ")";
    gate.line(c.id, ok, since(t0), name.str(),
              params_str(x.design, x.lambda) + " expected lambda " + std::to_string(c.lambda) + extra);
  }
  {
    const auto t0 = Clock::now();
    const auto ws = family4_search(8, threads);
    bool ok = !ws.empty();
    std::string detail = std::to_string(ws.size()) + " witnesses";
    if (ok) {
      const Subspace b = family_block(8, ws.front());
      meets.push_back(ovoid_meet(b, ctx));
      const Built x = build_and_verify(g0, b.elements(), threads);
      ok = classify_family(8, ws.front()) == Family::kFamily4 && has_params(x, 4096, 64, 64, 4160, 266240);
      std::ostringstream o;
      o << detail << "; first (" << ws.front().x0 << "," << ws.front().y0 << "," << ws.front().z0 << ","
        << ws.front().t0 << ") " << params_str(x.design, x.lambda);
      detail = o.str();
    }
    gate.line("4d", ok, since(t0), "Family4 search", detail);
  }
  const bool geom = ctx.ovoid.size() == 455 && ctx.spread.size() == 65 && is_spread(ctx.spread, ctx.space);
  const bool meet7 = meets.size() == 4 && std::all_of(meets.begin(), meets.end(), [](std::size_t m) { return m == 7; });
  std::ostringstream o;
  o << "ovoid " << ctx.ovoid.size() << " spread " << ctx.spread.size() << " meets";
  for (auto m : meets) o << " " << m;
  const double total = since(t_all);
  gate.line("4e", geom && meet7 && total <= 600.0, total, "Sz(8) ovoid, spread, |B n O|", o.str());
}

void criterion5(Gate& gate) {
  const auto t0 = Clock::now();
  const SuzukiContext ctx = make_suzuki_context(8);
  std::size_t tuples = 0, discrepancies = 0, admitted = 0;
  for (Elem y = 1; y < 8; ++y) {
    for (Elem z = 1; z < 8; ++z) {
      for (Elem t = 1; t < 8; ++t) {
        const SuzukiTuple tup{1, y, z, t};
        const bool cond = intorb_condition1(ctx.field, tup) || zeta_fixed_points(8, tup) == 1;
        std::size_t meet = 0;
        for (Point x : family_block_literal(8, tup)) meet += ctx.on_ovoid(x);
        ++tuples;
        admitted += cond;
        discrepancies += cond != (meet == 7);
      }
    }
  }
  const double s = since(t0);
  gate.line("5", discrepancies == 0 && tuples == 343 && s <= 600.0, s, "orbit-meet condition cross-check q=8",
            std::to_string(tuples) + " tuples, " + std::to_string(admitted) + " satisfy the conditions, " +
                std::to_string(discrepancies) + " discrepancies");
}

PrimeAffine prime_of(const Matrix& m) { return PrimeAffine::from(AffineMap::from_linear(m)); }

void criterion6(Gate& gate, unsigned threads, std::uint64_t seed) {
  auto t0 = Clock::now();
  const Matrix a = ex3_matrix(Ex3Matrix::kAlpha), b = ex3_matrix(Ex3Matrix::kBeta);
  const Matrix a2 = a.power(2);
  const bool rel = a.power(4).is_identity() && (a2.inverse() * b.inverse() * a2 * b).is_identity() &&
                   b.power(3).is_identity() && (a * b).power(5).is_identity();
  const GenGroup h0 = atlas("Ex3-SL2(5)");
  const PointSpace space = h0.point_space();
  const Subspace bs = canonical_subspace(
      std::vector<Vector>{Vector(h0.field, {1, 0, 0, 0}), Vector(h0.field, {0, 0, 0, 1})}, 1);
  const PointAction gamma(space, {prime_of(ex3_matrix(Ex3Matrix::kGamma))});
  const bool moves = !(gamma.subspace_image(bs, 0) == bs);
  const Built x = build_and_verify(h0, bs.elements(), threads);
  const bool design_ok = has_params(x, 81, 9, 3, 30, 270) && x.flag.flag_transitive;
  gate.line("6a", rel && moves && design_ok, since(t0), "Ex3 relations, gamma, |B^H0|, design",
            std::string(rel ? "relations hold" : "relations FAIL") + (moves ? ", gamma moves B" : ", gamma fixes B") +
                ", |B^H0|=" + std::to_string(x.design.r()) + " " + params_str(x.design, x.lambda) +
                (x.flag.flag_transitive ? " flag-transitive" : " not flag-transitive"));

  t0 = Clock::now();
  const StabilizerResult st = linear_blockset_stabilizer(x.design.blocks0, 3, 4, {.seed = seed});
  std::ostringstream o;
  o << "order " << st.order << (st.certified ? " (certified)" : " (NOT certified)") << ", expected 480";
  gate.line("6b", st.order == 480 && st.certified, since(t0), "Ex3 linear stabilizer order", o.str());

  t0 = Clock::now();
  bool subs = true;
  std::ostringstream so;
  for (auto [name, order] : {std::pair<const char*, std::uint64_t>{"Ex3-SL2(5)", 120}, {"Ex3-SL2(5).2", 240}}) {
    const GenGroup h = atlas(name);
    const std::uint64_t n = enumerate_elements(h).size();
    const bool stab = std::all_of(h.gens.begin(), h.gens.end(), [&](const AffineMap& m) {
      return stabilizes_blockset(x.design.blocks0, space, PrimeAffine::from(m));
    });
    subs = subs && n == order && stab;
    so << name << " order " << n << (stab ? " stabilizes " : " does not stabilize ");
  }
  gate.line("6c", subs, since(t0), "Ex3 subgroups of orders 120, 240", so.str());
}

void criterion7(Gate& gate) {
  const auto t_all = Clock::now();
  auto search = [](const GenGroup& g0, std::uint64_t lambda) {
    std::vector<std::pair<SearchHit, StabilizerResult>> out;
    for (auto& h : base_block_search(g0, 8, lambda)) {
      StabilizerResult st = linear_blockset_stabilizer(h.design.blocks0, 2, 6);
      out.emplace_back(std::move(h), std::move(st));
    }
    return out;
  };
  auto t0 = Clock::now();
  const auto l2 = search(atlas("GammaL1-subgroup", {.p = 2, .degree = 6, .c = 7, .e = 0, .sexp = 3}), 2);
  bool spreads = false;
  for (const auto& [h, st] : l2) {
    const auto parts = spread_decomposition(h.design, 2);
    spreads = spreads || (parts && parts->size() == 2 && (*parts)[0].size() == 9 && (*parts)[1].size() == 9);
  }
  gate.line("7a", !l2.empty() && spreads, since(t0), "lambda=2 under D18",
            std::to_string(l2.size()) + " designs" + (spreads ? ", two spreads of 9" : ", no two-spread split"));

  t0 = Clock::now();
  const auto l4 = search(atlas("SU3(2)-on-V6(2)"), 4);
  std::uint64_t best = 0;
  bool cert4 = true;
  for (const auto& [h, st] : l4) {
    if (st.order > best) best = st.order;
    cert4 = cert4 && st.certified;
  }
  gate.line("7b", !l4.empty() && best >= 432 && cert4, since(t0), "lambda=4 under SU3(2)",
            std::to_string(l4.size()) + " designs, largest stabilizer " + std::to_string(best));

  t0 = Clock::now();
  std::set<std::uint64_t> orders;
  std::size_t n8 = 0;
  bool cert8 = true;
  for (const GenGroup& g0 : {atlas("SigmaU3(2)-on-V6(2)"), gammaU3_2_on_V6_2()}) {
    for (const auto& [h, st] : search(g0, 8)) {
      ++n8;
      orders.insert(st.order);
      cert8 = cert8 && st.certified;
    }
  }
  std::ostringstream o;
  o << n8 << " designs, stabilizer orders";
  for (auto x : orders) o << " " << x;
  const double total = since(t_all);
  gate.line("7c", n8 > 0 && orders.count(12096) && orders.count(1296) && cert8 && total <= 900.0, since(t0),
            "lambda=8 under SigmaU3(2), GammaU3(2)", o.str());
}

void criterion8(Gate& gate, unsigned threads, std::uint64_t seed) {
  const auto t0 = Clock::now();
  CatalogConfig cfg;
  cfg.threads = threads;
  cfg.seed = seed;
  const CatalogResult res = run_catalog(cfg);
  static const std::set<std::string> kLemmas = {"tactical-ratio", "cici-bound", "subspace-translation-consistency",
                                                "replication-three-ways"};
  std::size_t checks = 0, violations = 0;
  std::vector<std::string> skipped;
  for (const auto& e : res.report["entries"]) {
    if (e.contains("structural")) skipped.push_back(e["id"].get<std::string>());
    for (const auto& c : e["checks"]) {
      if (!kLemmas.count(c["name"].get<std::string>())) continue;
      ++checks;
      violations += !c["pass"].get<bool>();
    }
  }
  std::string detail = std::to_string(checks) + " lemma checks, " + std::to_string(violations) + " violations";
  if (!skipped.empty()) {
    detail += "; skipped (not 2-designs):";
    for (const auto& s : skipped) detail += " " + s;
  }
  gate.line("8", checks > 0 && violations == 0, since(t0), "structural lemmas over the catalog", detail);
}

void criterion9(Gate& gate) {
  const auto t0 = Clock::now();
  bool ok = primitive_part(2, 6) == 1 && primitive_part(7, 4) == 25 && primitive_part(3, 6) == 7 &&
            primitive_part(2, 10) == 11;
  std::size_t bad = 0;
  for (std::uint64_t a = 2; a <= 16; ++a) {
    for (std::uint64_t e = 1; e <= 12; ++e) {
      for (std::uint64_t w : prime_factors(primitive_part(a, e))) bad += w % e != 1 % e;
    }
  }
  gate.line("9", ok && bad == 0, since(t0), "primitive part",
            std::string(ok ? "regressions match" : "regression mismatch") + ", " + std::to_string(bad) +
                " prime divisors off 1 mod e");
}

void sz32(Gate& gate, unsigned threads) {
  const auto t0 = Clock::now();
  const SuzukiContext ctx = make_suzuki_context(32);
  const Subspace b = family_block(32, {1, 0, 1, 0});
  const GenGroup g = affine_closure(ctx.sz);
  const Design d = build_design(b.elements(), g);
  const LambdaReport lam = verify_2design(d, VerifyMode::kOrbitwise, &ctx.sz, threads);
  const double s = since(t0);
  gate.line("L", lam.ok && lam.lambda == 32 && d.r() == 32u * 1025u && s <= 1800.0, s, "Sz(32) Family1 slice",
            params_str(d, lam));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance gate"};
  unsigned threads = 1;
  std::uint64_t seed = 1;
  bool large = false;
  std::vector<std::string> expect_fail;
  app.add_option("--threads", threads)->check(CLI::PositiveNumber);
  app.add_option("--seed", seed);
  app.add_flag("--large", large, "include the Sz(32) line");
  app.add_option("--expect-fail", expect_fail, "criterion ids known to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  Gate gate;
  try {
    criterion1(gate, threads);
    criterion2(gate, threads);
    criterion3(gate, threads);
    criterion4(gate, threads);
    criterion5(gate);
    criterion6(gate, threads, seed);
    criterion7(gate);
    criterion8(gate, threads, seed);
    criterion9(gate);
    if (large) sz32(gate, threads);
  } catch (const std::exception& e) {
    std::printf("ERROR %s\n", e.what());
    return 1;
  }

  const std::set<std::string> want(expect_fail.begin(), expect_fail.end());
  std::printf("failed:");
  for (const auto& f : gate.failed) std::printf(" %s", f.c_str());
  std::printf("%s\n", gate.failed.empty() ? " none" : "");
  if (gate.failed != want) {
    std::printf("failing set differs from the expected-fail list\n");
    return 1;
  }
  return 0;
}
