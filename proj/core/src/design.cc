#include "ftd/design.h"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace ftd {

namespace {

std::optional<std::uint32_t> log_exact(std::uint64_t x, std::uint64_t p) {
  std::uint32_t e = 0;
  while (x > 1 && x % p == 0) {
    x /= p;
    ++e;
  }
  if (x != 1) return std::nullopt;
  return e;
}

bool block_has(const Block& b, Point x) { return std::binary_search(b.begin(), b.end(), x); }

Block translate(const PointSpace& space, const Block& b, Point t) {
  Block out;
  out.reserve(b.size());
  for (Point x : b) out.push_back(space.add(x, t));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool DesignParams::consistent() const {
  if (p < 2) return false;
  std::uint64_t pm = 1;
  for (std::uint32_t i = 0; i < m; ++i) pm *= p;
  return v == pm * pm && k == pm && lambda != 0 && k % lambda == 0 && r == lambda * (pm + 1) &&
         b * k == v * r && m <= t + f && f <= m;
}

DesignParams DesignParams::expected(std::uint32_t p, std::uint32_t m, std::uint64_t lambda) {
  DesignParams d;
  d.p = p;
  d.m = m;
  d.k = 1;
  for (std::uint32_t i = 0; i < m; ++i) d.k *= p;
  d.v = d.k * d.k;
  d.lambda = lambda;
  d.r = lambda * (d.k + 1);
  d.b = d.v * d.r / d.k;
  d.f = log_exact(lambda, p).value_or(0);
  d.t = m;
  return d;
}

std::vector<Block> Design::all_blocks(std::uint64_t limit) const {
  if (v() * r() * k > limit) throw DesignError("design too large to materialize");
  std::unordered_set<Block, BlockHash> seen;
  std::vector<Block> out;
  for (const auto& b0 : blocks0) {
    for (Point t = 0; t < v(); ++t) {
      Block b = translate(space, b0, t);
      if (seen.insert(b).second) out.push_back(std::move(b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GenGroup linear_part(const GenGroup& g) {
  GenGroup out{g.name, g.field, g.dim, {}, std::nullopt, false, g.form};
  if (out.name.rfind("T:", 0) == 0) out.name = out.name.substr(2);
  for (const auto& m : g.gens) {
    if (m.linear.is_identity()) continue;
    out.gens.push_back(AffineMap::from_linear(m.linear));
  }
  if (g.known_order) {
    if (g.contains_translations) {
      const std::uint64_t t = g.point_space().size();
      if (*g.known_order % t == 0) out.known_order = *g.known_order / t;
    } else if (g.is_linear()) {
      out.known_order = g.known_order;
    }
  }
  return out;
}

Design build_design(const Block& base_in, const GenGroup& g, std::size_t cap) {
  if (!g.contains_translations) throw DesignError("design group must contain the translations");
  const PointSpace space = g.point_space();
  Block base = base_in;
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (base.empty() || base.front() != 0) throw DesignError("base block must contain 0");
  if (base.back() >= space.size()) throw DesignError("base block point outside V");
  if (!log_exact(base.size(), space.p())) throw DesignError("block size is not a power of p");

  Design d;
  d.space = space;
  d.k = base.size();
  d.base_block = base;
  d.group_name = g.name;

  const GenGroup g0 = linear_part(g);
  const PointAction act(g0);
  if (is_gf_p_subspace(space, base)) {
    // Translating a subspace by one of its points gives it back.
    const Subspace s = Subspace::span_points(space, base);
    auto orbit = subspace_orbit(act, s, cap);
    d.blocks0.reserve(orbit.size());
    for (const auto& sub : orbit.elements) d.blocks0.push_back(sub.elements());
  } else {
    auto orbit = block_orbit(act, base, cap);
    std::unordered_set<Block, BlockHash> seen;
    for (const auto& b : orbit.elements) {
      for (Point x : b) {
        Block shifted = translate(space, b, space.neg(x));
        if (seen.insert(shifted).second) {
          if (seen.size() > cap) throw CapExceeded("blocks through 0 exceed cap");
          d.blocks0.push_back(std::move(shifted));
        }
      }
    }
  }
  std::sort(d.blocks0.begin(), d.blocks0.end());
  return d;
}

std::vector<std::uint64_t> pair_counts_through_zero(const Design& d) {
  std::vector<std::uint64_t> cnt(d.v(), 0);
  for (const auto& b : d.blocks0) {
    for (Point x : b) ++cnt[x];
  }
  return cnt;
}

LambdaReport verify_2design(const Design& d, VerifyMode mode, const GenGroup* g0, unsigned threads) {
  LambdaReport rep;
  const std::uint64_t v = d.v();
  if (mode == VerifyMode::kBruteforce) {
    if (d.b() * d.k * d.k > 100'000'000ull) {
      rep.message = "bruteforce verification needs b k^2 <= 1e8";
      return rep;
    }
    const auto blocks = d.all_blocks();
    std::vector<std::uint32_t> cnt(v * v, 0);
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) ++cnt[std::uint64_t{b[i]} * v + b[j]];
      }
    }
    bool first = true;
    for (Point x = 0; x < v; ++x) {
      for (Point y = x + 1; y < v; ++y) {
        const std::uint64_t c = cnt[std::uint64_t{x} * v + y];
        if (first) {
          rep.lambda = c;
          rep.pair_a = {x, y};
          rep.count_a = c;
          first = false;
        } else if (c != rep.lambda) {
          rep.pair_b = {x, y};
          rep.count_b = c;
          rep.message = "pair counts are not uniform";
          return rep;
        }
      }
    }
    rep.ok = true;
    rep.pair_a.reset();
    return rep;
  }

  if (!g0) {
    rep.message = "orbitwise verification needs the linear group";
    return rep;
  }
  const auto orbits = point_orbits(PointAction(*g0));
  std::vector<Point> reps;
  for (const auto& o : orbits) {
    if (o.front() != 0) reps.push_back(o.front());
  }
  std::vector<std::uint64_t> counts(reps.size(), 0);
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < reps.size(); i += threads) {
      std::uint64_t c = 0;
      for (const auto& b : d.blocks0) c += block_has(b, reps[i]);
      counts[i] = c;
    }
  };
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  if (reps.empty()) {
    rep.message = "no nonzero points";
    return rep;
  }
  rep.lambda = counts[0];
  for (std::size_t i = 1; i < reps.size(); ++i) {
    if (counts[i] != rep.lambda) {
      rep.pair_a = {0, reps[0]};
      rep.count_a = counts[0];
      rep.pair_b = {0, reps[i]};
      rep.count_b = counts[i];
      rep.message = "pair counts differ between G0-orbits";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

FlagReport check_flag_transitive(const Design& d, const GenGroup& g, std::uint64_t literal_limit) {
  FlagReport rep;
  Block seed = d.base_block;
  if (seed.empty() || seed.front() != 0) seed = d.blocks0.front();
  try {
    if (d.b() * d.k <= literal_limit) {
      rep.literal = true;
      rep.expected = d.b() * d.k;
      const PointAction act(g);
      rep.orbit = flag_orbit(act, Flag{0, seed}, static_cast<std::size_t>(rep.expected) + 1).size();
    } else {
      if (!g.contains_translations) throw DesignError("slice criterion needs the translations in G");
      rep.expected = d.r();
      const PointAction act(linear_part(g));
      const auto cap = static_cast<std::size_t>(rep.expected) + 1;
      rep.orbit = is_gf_p_subspace(d.space, seed)
                      ? subspace_orbit(act, Subspace::span_points(d.space, seed), cap).size()
                      : block_orbit(act, seed, cap).size();
    }
  } catch (const CapExceeded&) {
    rep.orbit = rep.expected + 1;
  }
  rep.flag_transitive = rep.orbit == rep.expected;
  return rep;
}

TacticalReport tactical_counts(const Design& d, const GenGroup& g0, const Block& block) {
  TacticalReport rep;
  rep.ratio = d.k + 1;
  rep.ok = true;
  for (const auto& o : point_orbits(PointAction(g0))) {
    if (o.front() == 0) continue;
    TacticalRow row;
    row.orbit_size = o.size();
    for (Point x : block) row.meet += std::binary_search(o.begin(), o.end(), x);
    row.ratio_ok = row.orbit_size == rep.ratio * row.meet;
    rep.ok = rep.ok && row.ratio_ok;
    rep.rows.push_back(row);
  }
  return rep;
}

TacticalReport tactical_counts(const Design& d, const GenGroup& g0) {
  Block seed = d.base_block;
  if (seed.empty() || seed.front() != 0) seed = d.blocks0.front();
  return tactical_counts(d, g0, seed);
}

TranslationStabilizer translation_block_stabilizer(const Design& d, const Block& block, std::uint64_t lambda) {
  TranslationStabilizer ts;
  const PointSpace& s = d.space;
  for (Point b : block) {
    const Point t = s.sub(b, block.front());
    bool fixes = std::all_of(block.begin(), block.end(), [&](Point x) { return block_has(block, s.add(x, t)); });
    ts.order += fixes;
  }
  const std::uint32_t p = s.p();
  auto t = log_exact(ts.order, p);
  auto f = log_exact(lambda, p);
  auto m = log_exact(block.size(), p);
  if (!t || !f || !m) return ts;
  ts.t = *t;
  ts.f = *f;
  ts.m = *m;
  ts.bound_ok = ts.m <= ts.t + ts.f && ts.f <= ts.m;
  return ts;
}

bool is_gf_p_subspace(const PointSpace& space, const Block& b) {
  if (b.empty() || b.front() != 0) return false;
  Echelon e(space);
  for (Point x : b) e.insert(x);
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < e.rank(); ++i) size *= space.p();
  return size == b.size();
}

SubspaceReport blocks_are_subspaces(const Design& d, const FieldPtr& field, std::size_t n) {
  SubspaceReport rep;
  rep.subspaces = std::all_of(d.blocks0.begin(), d.blocks0.end(),
                              [&](const Block& b) { return is_gf_p_subspace(d.space, b); });
  if (!rep.subspaces) return rep;
  rep.translates = true;
  rep.prime_dim = log_exact(d.k, d.space.p()).value_or(0);
  const Field& k = *field;
  for (std::uint32_t deg = k.h(); deg >= 1; --deg) {
    if (k.h() % deg != 0) continue;
    const Elem c = k.subfield_basis(deg).size() > 1 ? k.subfield_basis(deg)[1] : 1;
    bool closed = deg == 1;
    if (!closed) {
      closed = std::all_of(d.blocks0.begin(), d.blocks0.end(), [&](const Block& b) {
        Echelon e(d.space);
        for (Point x : b) e.insert(x);
        for (Point x : e.canonical_basis()) {
          if (!block_has(b, Vector::from_point(field, n, x).scaled(c).to_point())) return false;
        }
        return true;
      });
    }
    if (closed) {
      rep.field_degree = deg;
      break;
    }
  }
  return rep;
}

ReplicationCheck replication_three_ways(const Design& d, std::uint64_t lambda) {
  ReplicationCheck rc;
  rc.through_zero = d.r();
  rc.from_lambda = lambda * (d.k + 1);
  // Count distinct blocks by translation classes of the blocks through 0: a
  // class has k/|T_B| members through 0 and v/|T_B| blocks in all.
  std::unordered_map<Block, std::uint64_t, BlockHash> members;
  std::unordered_map<Block, std::uint64_t, BlockHash> stab;
  for (const auto& b0 : d.blocks0) {
    Block rep = b0;
    std::uint64_t tb = d.k;
    if (!is_gf_p_subspace(d.space, b0)) {
      tb = 0;
      for (Point x : b0) {
        Block shifted = translate(d.space, b0, d.space.neg(x));
        if (shifted == b0) ++tb;
        rep = std::min(rep, shifted);
      }
    }
    ++members[rep];
    stab[rep] = tb;
  }
  std::uint64_t b = 0;
  bool classes_ok = true;
  for (const auto& [rep, count] : members) {
    const std::uint64_t tb = stab[rep];
    b += d.v() / tb;
    classes_ok = classes_ok && count == d.k / tb;
  }
  rc.from_b = b * d.k / d.v();
  rc.ok = classes_ok && rc.through_zero == rc.from_lambda && rc.from_lambda == rc.from_b;
  return rc;
}

nlohmann::json design_to_json(const Design& d, std::optional<std::uint64_t> lambda, std::uint64_t block_limit) {
  nlohmann::json j;
  j["space"] = {{"p", d.space.p()}, {"dim", d.space.dim()}};
  j["params"] = {{"v", d.v()}, {"k", d.k}, {"r", d.r()}, {"b", d.b()}};
  j["params"]["lambda"] = lambda ? nlohmann::json(*lambda) : nlohmann::json(nullptr);
  j["base_block"] = d.base_block;
  j["group"] = d.group_name;
  if (d.r() * d.k <= block_limit) {
    j["blocks_through_zero"] = d.blocks0;
  } else {
    j["blocks_omitted"] = true;
  }
  return j;
}

Design design_from_json(const nlohmann::json& j) {
  Design d;
  try {
    d.space = PointSpace(j.at("space").at("p").get<std::uint32_t>(), j.at("space").at("dim").get<std::uint32_t>());
    d.base_block = j.at("base_block").get<Block>();
    d.group_name = j.value("group", "");
    if (!j.contains("blocks_through_zero")) throw DesignError("design file has no blocks through 0");
    d.blocks0 = j.at("blocks_through_zero").get<std::vector<Block>>();
  } catch (const nlohmann::json::exception& e) {
    throw DesignError(std::string("malformed design JSON: ") + e.what());
  }
  if (d.blocks0.empty()) throw DesignError("design has no blocks");
  d.k = d.blocks0.front().size();
  for (auto& b : d.blocks0) {
    std::sort(b.begin(), b.end());
    if (b.size() != d.k) throw DesignError("blocks of different sizes");
    if (b.front() != 0) throw DesignError("listed block does not contain 0");
    if (b.back() >= d.space.size()) throw DesignError("block point outside V");
  }
  std::sort(d.blocks0.begin(), d.blocks0.end());
  d.blocks0.erase(std::unique(d.blocks0.begin(), d.blocks0.end()), d.blocks0.end());
  std::sort(d.base_block.begin(), d.base_block.end());
  return d;
}

}  // namespace ftd
