// ftdesign: build and verify the flag-transitive 2-design catalog.
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ftd/atlas.h"
#include "ftd/autsearch.h"
#include "ftd/catalog.h"
#include "ftd/design.h"
#include "ftd/suzuki.h"

namespace {

using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << "\n";
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string tuple_str(const ftd::SuzukiTuple& t) {
  return "(" + std::to_string(t.x0) + "," + std::to_string(t.y0) + "," + std::to_string(t.z0) + "," +
         std::to_string(t.t0) + ")";
}

void require_suzuki_q(std::uint32_t q) {
  if (q != 8 && q != 32) throw UsageError("--q must be 8 or 32");
}

std::uint64_t family_lambda(std::uint32_t q, const ftd::SuzukiTuple& t, const ftd::GenGroup& sz,
                            const ftd::GenGroup& g, unsigned threads) {
  const ftd::Design d = ftd::build_design(ftd::family_block(q, t).elements(), g);
  const auto rep = ftd::verify_2design(d, ftd::VerifyMode::kOrbitwise, &sz, threads);
  return rep.ok ? rep.lambda : 0;
}

json suzuki_record(std::uint32_t q, const ftd::SuzukiTuple& t, ftd::Family fam, std::uint64_t lambda) {
  json j = {{"q", q}, {"x0", t.x0}, {"y0", t.y0}, {"z0", t.z0}, {"t0", t.t0}, {"family", ftd::to_string(fam)}};
  j["lambda"] = lambda ? json(lambda) : json(nullptr);
  return j;
}

int cmd_catalog(const ftd::CatalogConfig& cfg, const std::string& json_path) {
  const auto res = ftd::run_catalog(cfg);
  for (const auto& e : res.report["entries"]) {
    std::cout << (e["status"] == "pass" ? "PASS " : e["status"] == "fail" ? "FAIL " : "ERROR") << " "
              << e["id"].get<std::string>();
    if (e.contains("error")) std::cout << ": " << e["error"].get<std::string>();
    std::cout << "\n";
    for (const auto& c : e["checks"]) {
      if (!c["pass"].get<bool>()) {
        std::cout << "      failed " << c["name"].get<std::string>() << " [" << c["subject"].get<std::string>()
                  << "] " << c["detail"].dump() << "\n";
      }
    }
  }
  std::cout << res.passed << " passed, " << res.failed << " failed\n";
  write_json(json_path, res.report);
  return res.all_pass() ? kOk : kFail;
}

int cmd_families(std::uint32_t q, unsigned threads, const std::string& json_path) {
  require_suzuki_q(q);
  const auto ctx = ftd::make_suzuki_context(q);
  const auto g = ftd::affine_closure(ctx.sz);
  const ftd::Elem w = ctx.field->primitive();
  // Family 3: x0 = y0 = 1 and t0 = z0^(sigma+1).
  const ftd::Elem t3 = ctx.field->mul(ctx.field->suzuki_sigma(w), w);
  std::vector<std::pair<ftd::SuzukiTuple, ftd::Family>> reps = {{{1, 0, 1, 0}, ftd::Family::kFamily1},
                                                                 {{1, 1, 1, 1}, ftd::Family::kFamily2},
                                                                 {{1, 1, w, t3}, ftd::Family::kFamily3}};
  const auto f4 = ftd::family4_search(q, threads);
  if (!f4.empty()) reps.push_back({f4.front(), ftd::Family::kFamily4});
  json out = json::array();
  std::cout << "q=" << q << " ovoid vectors " << ctx.ovoid.size() << ", spread components " << ctx.spread.size()
            << ", Family 4 witnesses " << f4.size() << "\n";
  for (const auto& [tup, fam] : reps) {
    const auto got = ftd::classify_family(q, tup);
    const auto meet = ftd::ovoid_meet(ftd::family_block(q, tup), ctx);
    const auto lam = q == 8 ? family_lambda(q, tup, ctx.sz, g, threads) : 0;
    std::cout << ftd::to_string(got) << " " << tuple_str(tup) << " meet " << meet << " lambda "
              << (lam ? std::to_string(lam) : "-") << "\n";
    out.push_back(suzuki_record(q, tup, got, lam));
  }
  write_json(json_path, out);
  return kOk;
}

int cmd_family4(std::uint32_t q, unsigned threads, const std::string& json_path) {
  require_suzuki_q(q);
  const auto ctx = ftd::make_suzuki_context(q);
  const auto g = ftd::affine_closure(ctx.sz);
  const auto f4 = ftd::family4_search(q, threads);
  std::map<std::vector<ftd::Point>, std::uint64_t> cache;
  json out = json::array();
  bool ok = !f4.empty();
  for (const auto& t : f4) {
    std::uint64_t lam = 0;
    if (q == 8) {
      const auto key = ftd::family_block(q, t).elements();
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, family_lambda(q, t, ctx.sz, g, threads)).first;
      lam = it->second;
      ok = ok && lam == std::uint64_t{q} * q;
    }
    out.push_back(suzuki_record(q, t, ftd::Family::kFamily4, lam));
  }
  std::cout << f4.size() << " Family 4 witnesses at q=" << q;
  if (q == 8) std::cout << ", " << cache.size() << " distinct blocks, all lambda=" << q * q << ": " << (ok ? "yes" : "no");
  std::cout << "\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(f4.size(), 10); ++i) std::cout << "  " << tuple_str(f4[i]) << "\n";
  if (f4.size() > 10) std::cout << "  ...\n";
  write_json(json_path, out);
  return ok ? kOk : kFail;
}

int cmd_table1(std::uint64_t lambda, std::uint64_t seed, const std::string& json_path) {
  std::vector<ftd::GenGroup> groups;
  if (lambda == 2) {
    groups.push_back(ftd::atlas("GammaL1-subgroup", {.p = 2, .degree = 6, .c = 7, .e = 0, .sexp = 3}));
  } else if (lambda == 4) {
    groups.push_back(ftd::atlas("SU3(2)-on-V6(2)"));
  } else if (lambda == 8) {
    groups.push_back(ftd::atlas("SigmaU3(2)-on-V6(2)"));
    groups.push_back(ftd::gammaU3_2_on_V6_2());
  } else {
    throw UsageError("--lambda must be 2, 4 or 8");
  }
  json out = json::array();
  for (const auto& g0 : groups) {
    ftd::SearchStats st;
    const auto hits = ftd::base_block_search(g0, 8, lambda, &st);
    std::cout << g0.name << ": " << hits.size() << " designs (" << st.subspace_candidates << " subspaces, "
              << st.invariant_candidates << " invariant sets)\n";
    for (const auto& h : hits) {
      const auto s = ftd::linear_blockset_stabilizer(h.design.blocks0, 2, 6, {.seed = seed});
      std::cout << "  base {";
      for (std::size_t i = 0; i < h.base.size(); ++i) std::cout << (i ? "," : "") << h.base[i];
      std::cout << "} stabilizer order " << s.order << (s.certified ? " (certified)" : "") << "\n";
      json j = ftd::design_to_json(h.design, lambda);
      j["stabilizer_order"] = s.order;
      j["search_group"] = g0.name;
      out.push_back(std::move(j));
    }
  }
  write_json(json_path, out);
  return out.empty() ? kFail : kOk;
}

ftd::GenGroup parse_group(const std::string& spec, const ftd::AtlasParams& params) {
  const std::string prefix = "atlas:";
  if (spec.rfind(prefix, 0) != 0) throw UsageError("--group must look like atlas:NAME");
  const std::string name = spec.substr(prefix.size());
  if (name == "GammaU3(2)-on-V6(2)") return ftd::gammaU3_2_on_V6_2();
  return ftd::atlas(name, params);
}

int cmd_verify(const std::string& path, const std::string& group, const ftd::AtlasParams& params, unsigned threads,
               const std::string& json_path) {
  ftd::Design d = ftd::design_from_json(read_json(path));
  const ftd::GenGroup g0 = ftd::linear_part(parse_group(group, params));
  if (!(g0.point_space() == d.space)) throw UsageError("group does not act on the design's point space");
  const bool fits = d.b() * d.k * d.k <= 100'000'000ull;
  const auto orbit = ftd::verify_2design(d, ftd::VerifyMode::kOrbitwise, &g0, threads);
  json out = {{"v", d.v()}, {"k", d.k}, {"r", d.r()}, {"b", d.b()}, {"group", g0.name}};
  out["lambda"] = orbit.ok ? json(orbit.lambda) : json(nullptr);
  std::cout << "v=" << d.v() << " k=" << d.k << " r=" << d.r() << " b=" << d.b() << "\n";
  std::cout << "2-design (orbitwise): " << (orbit.ok ? "yes, lambda=" + std::to_string(orbit.lambda) : orbit.message)
            << "\n";
  bool ok = orbit.ok;
  if (fits) {
    const auto brute = ftd::verify_2design(d, ftd::VerifyMode::kBruteforce);
    std::cout << "2-design (all pairs): " << (brute.ok ? "yes, lambda=" + std::to_string(brute.lambda) : brute.message)
              << "\n";
    out["lambda_bruteforce"] = brute.ok ? json(brute.lambda) : json(nullptr);
    ok = ok && brute.ok && brute.lambda == orbit.lambda;
  }
  // The block set must be G0-invariant for the group to act on the design.
  bool invariant = true;
  for (const auto& m : g0.gens) invariant = invariant && ftd::stabilizes_blockset(d.blocks0, d.space, ftd::PrimeAffine::from(m));
  std::cout << "G0 preserves the blocks through 0: " << (invariant ? "yes" : "no") << "\n";
  out["group_preserves_blocks"] = invariant;
  ok = ok && invariant;
  if (invariant) {
    const auto fr = ftd::check_flag_transitive(d, ftd::affine_closure(g0));
    std::cout << "flag-transitive under T:G0: " << (fr.flag_transitive ? "yes" : "no") << " (orbit " << fr.orbit
              << " of " << fr.expected << ")\n";
    out["flag_transitive"] = fr.flag_transitive;
    ok = ok && fr.flag_transitive;
  }
  write_json(json_path, out);
  return ok ? kOk : kFail;
}

int cmd_autgroup(const std::string& path, std::uint64_t seed, const std::string& json_path) {
  ftd::Design d = ftd::design_from_json(read_json(path));
  const auto s = ftd::linear_blockset_stabilizer(d.blocks0, d.space.p(), d.space.dim(), {.seed = seed});
  std::cout << "order " << s.order << " (orbit lengths";
  for (auto o : s.orbit_lengths) std::cout << " " << o;
  std::cout << "), " << s.generators.size() << " generators, " << s.nodes << " nodes, " << s.prunes << " prunes\n";
  std::cout << "generators verified: " << (s.generators_verified ? "yes" : "no")
            << ", certified by enumeration: " << (s.certified ? "yes" : "no") << "\n";
  json gens = json::array();
  for (const auto& m : s.generators) gens.push_back(ftd::format_matrix(m));
  write_json(json_path, {{"order", s.order},
                         {"orbit_lengths", s.orbit_lengths},
                         {"certified", s.certified},
                         {"generators_verified", s.generators_verified},
                         {"nodes", s.nodes},
                         {"prunes", s.prunes},
                         {"generators", gens}});
  return s.generators_verified ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag-transitive 2-designs with a translation group: construction and verification"};
  app.require_subcommand(1);
  unsigned threads = 1;
  std::string json_path;
  bool large = false;
  std::uint64_t seed = 1;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--json", json_path, "Write a JSON report to this file");
  app.add_flag("--large", large, "Include the q=32 Suzuki entry");
  app.add_option("--seed", seed, "Seed for the stabilizer search candidate order");

  auto* catalog = app.add_subcommand("catalog", "Catalog of designs");
  catalog->require_subcommand(1);
  auto* run = catalog->add_subcommand("run", "Build and verify catalog entries");
  std::vector<std::string> entries;
  run->add_option("--entry,entries", entries, "Entry ids or globs (default: whole catalog)");
  auto* list = catalog->add_subcommand("list", "List catalog entries");

  auto* suzuki = app.add_subcommand("suzuki", "Suzuki-Tits geometry");
  suzuki->require_subcommand(1);
  std::uint32_t q = 8;
  auto* families = suzuki->add_subcommand("families", "One block per family with its lambda");
  families->add_option("--q", q, "Field order (8 or 32)");
  auto* f4 = suzuki->add_subcommand("family4-search", "Exhaustive Family 4 search");
  f4->add_option("--q", q, "Field order (8 or 32)");

  auto* table1 = app.add_subcommand("table1", "Designs on V6(2)");
  table1->require_subcommand(1);
  std::uint64_t lambda = 0;
  auto* search = table1->add_subcommand("search", "Base block search");
  search->add_option("--lambda", lambda, "2, 4 or 8")->required();

  auto* verify = app.add_subcommand("verify", "Verify a design file against a group");
  std::string design_path, group;
  ftd::AtlasParams params;
  verify->add_option("--design", design_path, "Design JSON")->required();
  verify->add_option("--group", group, "atlas:NAME")->required();
  verify->add_option("--q", params.q, "q for SL2, Sp4, Sz");
  verify->add_option("--s", params.s, "s for SU3");
  verify->add_option("--p", params.p, "p for GammaL1-subgroup and trivial");
  verify->add_option("--degree", params.degree, "Degree for GammaL1-subgroup and trivial");
  verify->add_option("--c", params.c, "c for GammaL1-subgroup");
  verify->add_option("--e", params.e, "e for GammaL1-subgroup");
  verify->add_option("--sexp", params.sexp, "Frobenius exponent for GammaL1-subgroup");

  auto* autgroup = app.add_subcommand("autgroup", "Linear stabilizer of a design's blocks through 0");
  autgroup->add_option("--design", design_path, "Design JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (catalog->parsed()) {
      if (list->parsed()) {
        for (const auto& e : ftd::catalog_entries()) {
          std::cout << e.id << (e.large ? " [large]" : "") << "  " << e.recipe << "\n";
        }
        return kOk;
      }
      return cmd_catalog({entries, large, threads, seed}, json_path);
    }
    if (families->parsed()) return cmd_families(q, threads, json_path);
    if (f4->parsed()) return cmd_family4(q, threads, json_path);
    if (search->parsed()) return cmd_table1(lambda, seed, json_path);
    if (verify->parsed()) return cmd_verify(design_path, group, params, threads, json_path);
    if (autgroup->parsed()) return cmd_autgroup(design_path, seed, json_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ftd::CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ftd::DesignError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
