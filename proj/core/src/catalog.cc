#include "ftd/catalog.h"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <set>

#include "ftd/atlas.h"
#include "ftd/autsearch.h"
#include "ftd/suzuki.h"

namespace ftd {

extern const char* const kReportSchema;

namespace {

using json = nlohmann::json;

json params_json(const DesignParams& p) {
  return {{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"r", p.r}, {"b", p.b}};
}

struct Record {
  json checks = json::array();
  json designs = json::array();
  json extra = json::object();
  bool ok = true;

  void check(const std::string& name, const std::string& subject, bool pass, json detail = json::object()) {
    checks.push_back({{"name", name}, {"subject", subject}, {"pass", pass}, {"detail", std::move(detail)}});
    ok = ok && pass;
  }
};

std::uint64_t group_order(const GenGroup& g) {
  if (g.known_order) return *g.known_order;
  return enumerate_elements(g).size();
}

// The checks every constructed design goes through. Returns the verified lambda
// (0 if the structure is not a 2-design).
std::uint64_t design_checks(Record& rec, const std::string& subject, const Design& d, const GenGroup& g0,
                            const GenGroup& g, const DesignParams& expected, unsigned threads) {
  const LambdaReport lam = verify_2design(d, VerifyMode::kOrbitwise, &g0, threads);
  json observed = {{"v", d.v()}, {"k", d.k}, {"r", d.r()}, {"b", d.b()}};
  observed["lambda"] = lam.ok ? json(lam.lambda) : json(nullptr);
  json lam_detail = {{"lambda", lam.ok ? json(lam.lambda) : json(nullptr)}};
  if (!lam.ok) {
    lam_detail["message"] = lam.message;
    if (lam.pair_a) lam_detail["witness"] = {{lam.pair_a->first, lam.pair_a->second, lam.count_a},
                                              {lam.pair_b->first, lam.pair_b->second, lam.count_b}};
  }
  rec.check("two-design", subject, lam.ok, lam_detail);
  rec.check("expected-params-consistent", subject, expected.consistent(), params_json(expected));
  const bool params_ok = lam.ok && d.v() == expected.v && d.k == expected.k && d.r() == expected.r &&
                         d.b() == expected.b && lam.lambda == expected.lambda;
  rec.check("params", subject, params_ok, {{"expected", params_json(expected)}, {"observed", observed}});

  if (d.b() * d.k * d.k <= 100'000'000ull) {
    const LambdaReport brute = verify_2design(d, VerifyMode::kBruteforce);
    rec.check("lambda-modes-agree", subject, brute.ok == lam.ok && (!lam.ok || brute.lambda == lam.lambda),
              {{"bruteforce", brute.ok ? json(brute.lambda) : json(nullptr)}});
  }

  const FlagReport fr = check_flag_transitive(d, g);
  rec.check("flag-transitive", subject, fr.flag_transitive,
            {{"orbit", fr.orbit}, {"expected", fr.expected}, {"literal", fr.literal}});

  const Block& base = d.base_block;
  const SubspaceReport sub = blocks_are_subspaces(d, g0.field, g0.dim);
  json sub_detail = {{"subspaces", sub.subspaces}, {"prime_dim", sub.prime_dim}, {"field_degree", sub.field_degree}};

  if (!lam.ok) {
    // The structural lemmas are statements about 2-designs.
    rec.extra["structural"] = "skipped: not a 2-design";
    return 0;
  }
  const TacticalReport tac = tactical_counts(d, g0);
  json rows = json::array();
  for (const auto& r : tac.rows) rows.push_back({r.orbit_size, r.meet});
  rec.check("tactical-ratio", subject, tac.ok, {{"ratio", tac.ratio}, {"rows", rows}});

  const TranslationStabilizer ts = translation_block_stabilizer(d, base, lam.lambda);
  rec.check("cici-bound", subject, ts.bound_ok,
            {{"translation_stabilizer", ts.order}, {"t", ts.t}, {"f", ts.f}, {"m", ts.m}});

  const bool base_sub = is_gf_p_subspace(d.space, base);
  sub_detail["base_is_subspace"] = base_sub;
  sub_detail["translation_stabilizer"] = ts.order;
  rec.check("subspace-translation-consistency", subject,
            base_sub == (ts.order == d.k) && (!sub.subspaces || base_sub), sub_detail);

  const ReplicationCheck rc = replication_three_ways(d, lam.lambda);
  rec.check("replication-three-ways", subject, rc.ok,
            {{"through_zero", rc.through_zero}, {"from_lambda", rc.from_lambda}, {"from_b", rc.from_b}});
  return lam.lambda;
}

json design_record(const Design& d, std::uint64_t lambda) {
  return design_to_json(d, lambda ? std::optional<std::uint64_t>(lambda) : std::nullopt, 4096);
}

std::uint32_t log_p(std::uint64_t x, std::uint32_t p) {
  std::uint32_t e = 0;
  while (x > 1) {
    x /= p;
    ++e;
  }
  return e;
}

// Subspace spanned over GF(p^d) by the given GF(q)-vectors.
Block span_block(const FieldPtr& f, const std::vector<std::vector<Elem>>& rows, std::uint32_t d) {
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.emplace_back(f, r);
  return canonical_subspace(vs, d).elements();
}

void run_simple(Record& rec, json& out, const std::string& subject, const GenGroup& g0, const Block& base,
                const DesignParams& expected, unsigned threads) {
  const GenGroup g = affine_closure(g0);
  Design d = build_design(base, g);
  const std::uint64_t lam = design_checks(rec, subject, d, g0, g, expected, threads);
  out["group"] = {{"name", g.name}, {"order", group_order(g)}};
  rec.designs.push_back(design_record(d, lam));
}

void entry_case6(Record& rec, json& out, std::uint32_t q, unsigned threads) {
  const GenGroup g0 = atlas("SL2", {.q = q});
  const FieldPtr& f = g0.field;
  const Block base = span_block(f, {{1, 0}, {0, 1}}, f->h() / 2);
  std::uint64_t lam = 1;
  for (std::uint32_t i = 0; i < f->h() / 2; ++i) lam *= f->p();
  run_simple(rec, out, "design", g0, base, DesignParams::expected(f->p(), f->h(), lam), threads);
}

void entry_case8(Record& rec, json& out, std::uint32_t q, unsigned threads) {
  const GenGroup g0 = atlas("Sp4", {.q = q});
  const FieldPtr& f = g0.field;
  const Block base = span_block(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}, f->h());
  run_simple(rec, out, "design", g0, base, DesignParams::expected(f->p(), 2 * f->h(), std::uint64_t{q} * q),
             threads);
}

void entry_case7(Record& rec, json& out, std::uint32_t s, unsigned threads) {
  const GenGroup g0 = atlas("SU3", {.s = s});
  const FieldPtr& f = g0.field;
  const Block base = span_block(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, f->h() / 2);
  const DesignParams expected = DesignParams::expected(f->p(), 3 * f->h() / 2, std::uint64_t{s} * s);
  run_simple(rec, out, "design", g0, base, expected, threads);
  const GenGroup g = affine_closure(g0);
  Design d = build_design(base, g);
  const TacticalReport tac = tactical_counts(d, g0);
  const std::uint64_t q = std::uint64_t{s} * s;
  // Orbit sizes (q^{3/2}+1)(q-1) and the rest of V*, meeting B in q-1 and q(s-1) points.
  std::map<std::uint64_t, std::uint64_t> want = {{(q * s + 1) * (q - 1), q - 1},
                                                 {d.v() - 1 - (q * s + 1) * (q - 1), q * (s - 1)}};
  std::map<std::uint64_t, std::uint64_t> got;
  json rows = json::array();
  for (const auto& r : tac.rows) {
    got[r.orbit_size] += r.meet;
    rows.push_back({r.orbit_size, r.meet});
  }
  json want_rows = json::array();
  for (auto [o, m] : want) want_rows.push_back({o, m});
  rec.check("tactical-table", "design", tac.rows.size() == want.size() && got == want,
            {{"expected", want_rows}, {"observed", rows}});
}

void entry_suzuki(Record& rec, json& out, std::uint32_t q, const SuzukiTuple& tup, Family fam,
                  std::uint64_t lambda, unsigned threads) {
  const SuzukiContext ctx = make_suzuki_context(q);
  const GenGroup g0 = ctx.sz;
  const GenGroup g = affine_closure(g0);
  json tj = {tup.x0, tup.y0, tup.z0, tup.t0};
  out["tuple"] = tj;
  const Family got = classify_family(q, tup);
  rec.check("classification", "tuple", got == fam, {{"expected", to_string(fam)}, {"observed", to_string(got)}});
  const Subspace b = family_block(q, tup);
  const std::size_t meet = ovoid_meet(b, ctx);
  // Nonzero vectors on the ovoid's q^2+1 points.
  rec.check("ovoid-size", "ovoid", ctx.ovoid.size() == (std::uint64_t{q} * q + 1) * (q - 1),
            {{"size", ctx.ovoid.size()}});
  rec.check("spread", "spread", ctx.spread.size() == std::uint64_t{q} * q + 1 && is_spread(ctx.spread, ctx.space),
            {{"size", ctx.spread.size()}});
  rec.check("ovoid-meet", "block", meet == q - 1, {{"meet", meet}});
  if (fam == Family::kFamily1) {
    const TangencyReport tr = tangency_check(b, ctx);
    rec.check("tangent-not-in-spread", "block", tr.verdict == Tangency::kTangentNotInSpread,
              {{"meet", tr.meet}, {"in_spread", tr.in_spread}});
  }
  Design d = build_design(b.elements(), g);
  const std::uint64_t lam =
      design_checks(rec, "design", d, g0, g, DesignParams::expected(2, log_p(std::uint64_t{q} * q, 2), lambda), threads);
  out["group"] = {{"name", g.name}, {"order", group_order(g)}};
  rec.designs.push_back(design_record(d, lam));
}

void entry_family4(Record& rec, json& out, std::uint32_t q, unsigned threads) {
  const SuzukiContext ctx = make_suzuki_context(q);
  const GenGroup g0 = ctx.sz;
  const GenGroup g = affine_closure(g0);
  const auto witnesses = family4_search(q, threads);
  out["witnesses"] = witnesses.size();
  rec.check("witness-found", "search", !witnesses.empty(), {{"count", witnesses.size()}});
  bool all_f4 = true, all_meet = true;
  std::set<std::vector<Point>> seen;
  std::size_t verified = 0, distinct = 0;
  bool all_lambda = true;
  for (const auto& w : witnesses) {
    all_f4 = all_f4 && classify_family(q, w) == Family::kFamily4;
    const Subspace b = family_block(q, w);
    all_meet = all_meet && ovoid_meet(b, ctx) == q - 1;
    if (!seen.insert(b.elements()).second) continue;
    ++distinct;
    Design d = build_design(b.elements(), g);
    const LambdaReport lam = verify_2design(d, VerifyMode::kOrbitwise, &g0, threads);
    const bool ok = lam.ok && lam.lambda == std::uint64_t{q} * q;
    all_lambda = all_lambda && ok;
    verified += ok;
  }
  rec.check("witnesses-classify-family4", "search", all_f4, json::object());
  rec.check("ovoid-meet", "search", all_meet, json::object());
  rec.check("witness-designs-lambda", "search", all_lambda && distinct > 0,
            {{"distinct_blocks", distinct}, {"verified", verified}});
  if (witnesses.empty()) return;
  const SuzukiTuple& w = witnesses.front();
  out["tuple"] = {w.x0, w.y0, w.z0, w.t0};
  const Subspace b = family_block(q, w);
  Design d = build_design(b.elements(), g);
  const std::uint64_t lam = design_checks(rec, "design", d, g0, g,
                                          DesignParams::expected(2, log_p(std::uint64_t{q} * q, 2), std::uint64_t{q} * q),
                                          threads);
  out["group"] = {{"name", g.name}, {"order", group_order(g)}};
  rec.designs.push_back(design_record(d, lam));
}

void entry_intorb(Record& rec, json& out, std::uint32_t q) {
  const SuzukiContext ctx = make_suzuki_context(q);
  const FieldPtr& f = ctx.field;
  std::size_t tuples = 0, admitted = 0, meets = 0, discrepancies = 0;
  json first = nullptr;
  for (Elem y = 1; y < q; ++y) {
    for (Elem z = 1; z < q; ++z) {
      for (Elem t = 1; t < q; ++t) {
        const SuzukiTuple tup{1, y, z, t};
        ++tuples;
        const bool cond = intorb_condition1(f, tup) || zeta_fixed_points(q, tup) == 1;
        std::size_t meet = 0;
        for (Point x : family_block_literal(q, tup)) meet += ctx.on_ovoid(x);
        admitted += cond;
        meets += meet == q - 1;
        if (cond != (meet == q - 1)) {
          ++discrepancies;
          if (first.is_null()) first = {1, y, z, t};
        }
      }
    }
  }
  out["tuples"] = tuples;
  rec.check("intorb-cross-validation", "all-nonzero tuples", discrepancies == 0,
            {{"tuples", tuples}, {"conditions_hold", admitted}, {"meet_q_minus_1", meets},
             {"discrepancies", discrepancies}, {"first_discrepancy", first}});
}

PrimeAffine prime_of(const Matrix& m) { return PrimeAffine::from(AffineMap::from_linear(m)); }

PrimeAffine prime_inverse(const PointSpace& space, const PrimeAffine& x) {
  Matrix m(make_field(space.p(), 1), space.dim(), space.dim());
  for (std::uint32_t r = 0; r < space.dim(); ++r) {
    for (std::uint32_t c = 0; c < space.dim(); ++c) m.at(r, c) = space.digit(x.rows[r], c);
  }
  return prime_of(m.inverse());
}

void entry_case11(Record& rec, json& out, const CatalogConfig& cfg) {
  const Matrix a = ex3_matrix(Ex3Matrix::kAlpha);
  const Matrix b = ex3_matrix(Ex3Matrix::kBeta);
  const Matrix a2 = a.power(2);
  const bool rel = a.power(4).is_identity() && (a2.inverse() * b.inverse() * a2 * b).is_identity() &&
                   b.power(3).is_identity() && (a * b).power(5).is_identity();
  rec.check("alpha-beta-relations", "H0", rel, json::object());

  const GenGroup h0 = atlas("Ex3-SL2(5)");
  const FieldPtr& f = h0.field;
  const PointSpace space = h0.point_space();
  const Subspace bs = canonical_subspace(
      std::vector<Vector>{Vector(f, {1, 0, 0, 0}), Vector(f, {0, 0, 0, 1})}, 1);
  const PointAction gamma(space, {prime_of(ex3_matrix(Ex3Matrix::kGamma))});
  rec.check("gamma-moves-block", "B", !(gamma.subspace_image(bs, 0) == bs), json::object());

  const GenGroup g = affine_closure(h0);
  Design d = build_design(bs.elements(), g);
  rec.check("block-orbit", "B", d.r() == 30, {{"orbit", d.r()}});
  const std::uint64_t lam = design_checks(rec, "design", d, h0, g, DesignParams::expected(3, 2, 3), cfg.threads);
  out["group"] = {{"name", g.name}, {"order", group_order(g)}};
  rec.designs.push_back(design_record(d, lam));

  const StabilizerResult st = linear_blockset_stabilizer(d.blocks0, 3, 4, {.seed = cfg.seed});
  // Elements of the stabilizer normalizing H0.
  std::vector<PrimeAffine> gens;
  for (const auto& m : st.generators) gens.push_back(prime_of(m));
  const ElementSet all = enumerate_elements(space, gens);
  const ElementSet hset = enumerate_elements(h0);
  std::vector<PrimeAffine> hgens;
  for (const auto& m : h0.gens) hgens.push_back(PrimeAffine::from(m));
  std::uint64_t normalizing = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const PrimeAffine x = all.element(i);
    const PrimeAffine xi = prime_inverse(space, x);
    normalizing += std::all_of(hgens.begin(), hgens.end(), [&](const PrimeAffine& h) {
      return hset.contains(xi.then(space, h).then(space, x));
    });
  }
  rec.check("stabilizer-order", "blocks through 0", st.order == 480 && st.certified,
            {{"expected", 480}, {"order", st.order}, {"certified", st.certified},
             {"generators_verified", st.generators_verified}, {"orbit_lengths", st.orbit_lengths},
             {"normalizing_H0", normalizing}});
  json sub = json::object();
  bool subs_ok = true;
  for (auto [name, order] : {std::pair<const char*, std::uint64_t>{"Ex3-SL2(5)", 120}, {"Ex3-SL2(5).2", 240},
                             {"Ex3-SL2(5).2.2", 480}}) {
    const GenGroup h = atlas(name);
    const std::uint64_t n = enumerate_elements(h).size();
    const bool stab = std::all_of(h.gens.begin(), h.gens.end(), [&](const AffineMap& m) {
      return stabilizes_blockset(d.blocks0, space, PrimeAffine::from(m));
    });
    subs_ok = subs_ok && stab && n == order;
    sub[name] = {{"order", n}, {"stabilizes", stab}};
  }
  rec.check("subgroups-stabilize", "blocks through 0", subs_ok, sub);
}

json stabilizer_json(const StabilizerResult& s) {
  return {{"order", s.order},
          {"certified", s.certified},
          {"generators_verified", s.generators_verified},
          {"orbit_lengths", s.orbit_lengths},
          {"nodes", s.nodes},
          {"prunes", s.prunes}};
}

struct Table1Hit {
  SearchHit hit;
  StabilizerResult stab;
};

std::vector<Table1Hit> table1_search(Record& rec, const GenGroup& g0, std::uint64_t lambda, const CatalogConfig& cfg,
                                     const std::string& tag) {
  SearchStats stats;
  auto hits = base_block_search(g0, 8, lambda, &stats);
  rec.check("designs-found", tag, !hits.empty(),
            {{"hits", hits.size()}, {"subspace_candidates", stats.subspace_candidates},
             {"invariant_candidates", stats.invariant_candidates}, {"subgroups", stats.subgroups}});
  std::vector<Table1Hit> out;
  const GenGroup g = affine_closure(g0);
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const std::string subject = tag + " hit " + std::to_string(i);
    Design d = build_design(hits[i].base, g);
    const std::uint64_t lam = design_checks(rec, subject, d, g0, g, DesignParams::expected(2, 3, lambda), cfg.threads);
    StabilizerResult s = linear_blockset_stabilizer(d.blocks0, 2, 6, {.seed = cfg.seed});
    const StabilizerResult s2 = linear_blockset_stabilizer(d.blocks0, 2, 6, {.seed = cfg.seed + 7919});
    rec.check("stabilizer-certified", subject, s.certified && s.generators_verified, stabilizer_json(s));
    rec.check("stabilizer-order-stable", subject, s.order == s2.order, {{"reshuffled", s2.order}});
    json dj = design_record(d, lam);
    dj["stabilizer_order"] = s.order;
    dj["search_group"] = g0.name;
    rec.designs.push_back(std::move(dj));
    out.push_back({std::move(hits[i]), std::move(s)});
  }
  return out;
}

void entry_table1_lambda2(Record& rec, json& out, const CatalogConfig& cfg) {
  const GenGroup g0 = atlas("GammaL1-subgroup", {.p = 2, .degree = 6, .c = 7, .e = 0, .sexp = 3});
  out["group"] = {{"name", g0.name}, {"order", group_order(g0)}};
  const auto hits = table1_search(rec, g0, 2, cfg, "D18");
  bool spreads = false, divisible = false;
  for (const auto& h : hits) {
    spreads = spreads || spread_decomposition(h.hit.design, 2).has_value();
    divisible = divisible || h.stab.order % 54 == 0;
  }
  rec.check("two-spreads", "D18", spreads, json::object());
  rec.check("stabilizer-divisible-by-54", "D18", divisible, json::object());
}

void entry_table1_lambda4(Record& rec, json& out, const CatalogConfig& cfg) {
  const GenGroup g0 = atlas("SU3(2)-on-V6(2)");
  out["group"] = {{"name", g0.name}, {"order", group_order(g0)}};
  const auto hits = table1_search(rec, g0, 4, cfg, "SU3(2)");
  std::uint64_t best = 0;
  for (const auto& h : hits) best = std::max(best, h.stab.order);
  rec.check("stabilizer-at-least-432", "SU3(2)", best >= 432, {{"largest", best}});
}

void entry_table1_lambda8(Record& rec, json& out, const CatalogConfig& cfg) {
  std::set<std::uint64_t> orders;
  const GenGroup s432 = atlas("SigmaU3(2)-on-V6(2)");
  const GenGroup s1296 = gammaU3_2_on_V6_2();
  out["group"] = {{"name", s1296.name}, {"order", group_order(s1296)}};
  for (const auto& h : table1_search(rec, s432, 8, cfg, "SigmaU3(2)")) orders.insert(h.stab.order);
  for (const auto& h : table1_search(rec, s1296, 8, cfg, "GammaU3(2)")) orders.insert(h.stab.order);
  rec.check("stabilizer-orders", "lambda 8", orders.count(12096) && orders.count(1296),
            {{"orders", std::vector<std::uint64_t>(orders.begin(), orders.end())}});
}

void entry_case10(Record& rec, json& out, const CatalogConfig& cfg) {
  const GenGroup s432 = atlas("SigmaU3(2)-on-V6(2)");
  const auto hits = base_block_search(s432, 8, 8);
  const SearchHit* pick = nullptr;
  StabilizerResult st;
  for (const auto& h : hits) {
    StabilizerResult s = linear_blockset_stabilizer(h.design.blocks0, 2, 6, {.seed = cfg.seed});
    if (s.order == 12096) {
      pick = &h;
      st = std::move(s);
      break;
    }
  }
  rec.check("stabilizer-12096-found", "search", pick != nullptr, {{"hits", hits.size()}});
  if (!pick) return;
  rec.check("stabilizer-certified", "G0", st.certified && st.generators_verified, stabilizer_json(st));
  const GenGroup g0 = group_from_prime_matrices("G2(2)-stabilizer", 2, st.generators, st.order);
  const GenGroup g = affine_closure(g0);
  Design d = build_design(pick->base, g);
  const std::uint64_t lam = design_checks(rec, "design", d, g0, g, DesignParams::expected(2, 3, 8), cfg.threads);
  rec.check("replication-72", "design", d.r() == 72, {{"r", d.r()}});
  out["group"] = {{"name", g.name}, {"order", group_order(g)}};
  rec.designs.push_back(design_record(d, lam));

  const auto forms = invariant_bilinear_forms(g0.linear_parts(), FormKind::kSymplectic);
  const bool one = forms.size() == 1 && forms.front().gram.determinant() != 0;
  rec.check("invariant-symplectic-form", "G0", one, {{"forms", forms.size()}});
  if (forms.empty()) return;
  const BilinearForm& form = forms.front();
  bool iso = true;
  const FieldPtr& f = g0.field;
  for (const auto& blk : d.blocks0) {
    iso = iso && is_gf_p_subspace(d.space, blk);
    for (Point x : blk) {
      for (Point y : blk) {
        iso = iso && evaluate_form(form, Vector::from_point(f, 6, x), Vector::from_point(f, 6, y)) == 0;
      }
    }
  }
  rec.check("blocks-totally-isotropic", "blocks through 0", iso, json::object());
}

void entry_case9_q32(Record& rec, json& out, unsigned threads) {
  const std::uint32_t q = 32;
  const SuzukiContext ctx = make_suzuki_context(q);
  const GenGroup g0 = ctx.sz;
  const GenGroup g = affine_closure(g0);
  const SuzukiTuple tup{1, 0, 1, 0};
  out["tuple"] = {1, 0, 1, 0};
  const Subspace b = family_block(q, tup);
  rec.check("ovoid-meet", "block", ovoid_meet(b, ctx) == q - 1, json::object());
  Design d = build_design(b.elements(), g);
  const LambdaReport lam = verify_2design(d, VerifyMode::kOrbitwise, &g0, threads);
  rec.check("slice-lambda", "design", lam.ok && lam.lambda == q && d.r() == q * (std::uint64_t{q} * q + 1),
            {{"lambda", lam.lambda}, {"r", d.r()}, {"mode", "orbit representatives through 0"}});
  const FlagReport fr = check_flag_transitive(d, g);
  rec.check("flag-transitive", "design", fr.flag_transitive, {{"orbit", fr.orbit}, {"expected", fr.expected}});
  const ReplicationCheck rc = replication_three_ways(d, lam.lambda);
  rec.check("replication-three-ways", "design", rc.ok,
            {{"through_zero", rc.through_zero}, {"from_lambda", rc.from_lambda}, {"from_b", rc.from_b}});
  out["group"] = {{"name", g.name}, {"order", group_order(g)}};
  rec.designs.push_back(design_record(d, lam.ok ? lam.lambda : 0));
}

using Runner = std::function<void(Record&, json&, const CatalogConfig&)>;

struct Entry {
  CatalogEntryInfo info;
  Runner run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    auto add = [&](std::string id, std::string recipe, DesignParams p, bool large, Runner r) {
      e.push_back({{std::move(id), std::move(recipe), p, large}, std::move(r)});
    };
    // Family 3 at q=8: t0 = z0^(sigma+1) = w^5 for a generator w of GF(8)*.
    const FieldPtr f8 = suzuki_field(8);
    const Elem w = f8->primitive();
    const Elem w5 = f8->mul(f8->suzuki_sigma(w), w);
    add("thm1-case6-q4", "B = <e1,e2> over GF(2) in V2(4), G0 = SL2(4)", DesignParams::expected(2, 2, 2), false,
        [](Record& r, json& o, const CatalogConfig& c) { entry_case6(r, o, 4, c.threads); });
    add("thm1-case6-q9", "B = <e1,e2> over GF(3) in V2(9), G0 = SL2(9)", DesignParams::expected(3, 2, 3), false,
        [](Record& r, json& o, const CatalogConfig& c) { entry_case6(r, o, 9, c.threads); });
    add("thm1-case7-s3", "B = V3(3) inside V3(9), G0 = SU3(3)", DesignParams::expected(3, 3, 9), false,
        [](Record& r, json& o, const CatalogConfig& c) { entry_case7(r, o, 3, c.threads); });
    add("thm1-case8-q2", "B = <e1,e2> over GF(2) in V4(2), G0 = Sp4(2)", DesignParams::expected(2, 2, 4), false,
        [](Record& r, json& o, const CatalogConfig& c) { entry_case8(r, o, 2, c.threads); });
    add("thm1-case8-q3", "B = <e1,e2> over GF(3) in V4(3), G0 = Sp4(3)", DesignParams::expected(3, 2, 9), false,
        [](Record& r, json& o, const CatalogConfig& c) { entry_case8(r, o, 3, c.threads); });
    add("thm1-case9-q8-family1", "tuple (1,0,1,0), G0 = Sz(8)", DesignParams::expected(2, 6, 8), false,
        [](Record& r, json& o, const CatalogConfig& c) {
          entry_suzuki(r, o, 8, {1, 0, 1, 0}, Family::kFamily1, 8, c.threads);
        });
    add("thm1-case9-q8-family2", "tuple (1,1,1,1), G0 = Sz(8)", DesignParams::expected(2, 6, 32), false,
        [](Record& r, json& o, const CatalogConfig& c) {
          entry_suzuki(r, o, 8, {1, 1, 1, 1}, Family::kFamily2, 32, c.threads);
        });
    add("thm1-case9-q8-family3", "tuple (1,1,w,w^5), G0 = Sz(8)", DesignParams::expected(2, 6, 64), false,
        [w, w5](Record& r, json& o, const CatalogConfig& c) {
          entry_suzuki(r, o, 8, {1, 1, w, w5}, Family::kFamily3, 64, c.threads);
        });
    add("thm1-case9-q8-family4", "first witness of the exhaustive Family 4 search, G0 = Sz(8)",
        DesignParams::expected(2, 6, 64), false,
        [](Record& r, json& o, const CatalogConfig& c) { entry_family4(r, o, 8, c.threads); });
    add("thm1-case9-q8-intorb", "ovoid meet versus the orbit conditions over all tuples (1,y,z,t)", {}, false,
        [](Record& r, json& o, const CatalogConfig&) { entry_intorb(r, o, 8); });
    add("thm1-case10-q2", "lambda 8 design whose block set stabilizer has order 12096", DesignParams::expected(2, 3, 8),
        false, [](Record& r, json& o, const CatalogConfig& c) { entry_case10(r, o, c); });
    add("thm1-case11", "B = <e1,e4> in V4(3), G0 = SL2(5) from alpha, beta", DesignParams::expected(3, 2, 3), false,
        [](Record& r, json& o, const CatalogConfig& c) { entry_case11(r, o, c); });
    add("table1-lambda2", "base block search under D18 < GammaL1(64)", DesignParams::expected(2, 3, 2), false,
        [](Record& r, json& o, const CatalogConfig& c) { entry_table1_lambda2(r, o, c); });
    add("table1-lambda4", "base block search under SU3(2) on V6(2)", DesignParams::expected(2, 3, 4), false,
        [](Record& r, json& o, const CatalogConfig& c) { entry_table1_lambda4(r, o, c); });
    add("table1-lambda8", "base block search under the 432 and 1296 groups on V6(2)", DesignParams::expected(2, 3, 8),
        false, [](Record& r, json& o, const CatalogConfig& c) { entry_table1_lambda8(r, o, c); });
    add("thm1-case9-q32-family1", "tuple (1,0,1,0), G0 = Sz(32), slice verification",
        DesignParams::expected(2, 10, 32), true,
        [](Record& r, json& o, const CatalogConfig& c) { entry_case9_q32(r, o, c.threads); });
    return e;
  }();
  return entries;
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

const std::vector<CatalogEntryInfo>& catalog_entries() {
  static const std::vector<CatalogEntryInfo> infos = [] {
    std::vector<CatalogEntryInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> select_entries(const CatalogConfig& config) {
  std::vector<std::string> out;
  if (config.entries.empty()) {
    for (const auto& e : registry()) {
      if (!e.info.large || config.large) out.push_back(e.info.id);
    }
    return out;
  }
  std::set<std::string> chosen;
  for (const auto& pat : config.entries) {
    bool any = false;
    for (const auto& e : registry()) {
      if (fnmatch(pat.c_str(), e.info.id.c_str(), 0) != 0) continue;
      if (e.info.large && !config.large && pat != e.info.id) continue;
      any = true;
      chosen.insert(e.info.id);
    }
    if (!any) throw CatalogError("no catalog entry matches '" + pat + "'");
  }
  for (const auto& e : registry()) {
    if (chosen.count(e.info.id)) out.push_back(e.info.id);
  }
  return out;
}

json run_entry(const std::string& id, const CatalogConfig& config) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const Entry& e) { return e.info.id == id; });
  if (it == reg.end()) throw CatalogError("unknown catalog entry '" + id + "'");
  json out = {{"id", id}, {"recipe", it->info.recipe}};
  out["expected"] = it->info.expected.p ? params_json(it->info.expected) : json(nullptr);
  Record rec;
  try {
    it->run(rec, out, config);
    out["status"] = rec.ok ? "pass" : "fail";
  } catch (const std::exception& e) {
    out["status"] = "error";
    out["error"] = e.what();
    rec.ok = false;
  }
  out["checks"] = std::move(rec.checks);
  out["designs"] = std::move(rec.designs);
  for (auto& [k, v] : rec.extra.items()) out[k] = v;
  return out;
}

CatalogResult run_catalog(const CatalogConfig& config) {
  CatalogResult res;
  json entries = json::array();
  for (const auto& id : select_entries(config)) {
    json e = run_entry(id, config);
    (e["status"] == "pass" ? res.passed : res.failed) += 1;
    entries.push_back(std::move(e));
  }
  res.report = {{"format", "ftdesign-catalog-report"},
                {"version", 1},
                {"timestamp", utc_timestamp()},
                {"seed", config.seed},
                {"large", config.large},
                {"entries", std::move(entries)},
                {"summary", {{"passed", res.passed}, {"failed", res.failed}}}};
  return res;
}

const char* report_schema() { return kReportSchema; }

}  // namespace ftd
