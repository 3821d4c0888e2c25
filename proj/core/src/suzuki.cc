#include "ftd/suzuki.h"

#include <algorithm>
#include <mutex>
#include <thread>

#include "ftd/atlas.h"

namespace ftd {

namespace {

// m^e with the convention 0^e = 0 for every e.
Elem zpow(const Field& k, Elem m, std::int64_t e) { return m == 0 ? 0 : k.pow(m, e); }

std::int64_t sigma_exp(const Field& k) { return std::int64_t{1} << ((k.h() - 1) / 2 + 1); }

Subspace gf2_span(const FieldPtr& f, std::span<const Point> pts) {
  return Subspace::span_points(PointSpace(2, 4 * f->h()), pts);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::kFamily1: return "Family1";
    case Family::kFamily2: return "Family2";
    case Family::kFamily3: return "Family3";
    case Family::kFamily4: return "Family4";
    case Family::kNotABlock: return "NotABlock";
  }
  return "NotABlock";
}

FieldPtr suzuki_field(std::uint32_t q) {
  std::uint32_t h = 0;
  while ((std::uint32_t{1} << h) < q) ++h;
  if (q < 8 || (std::uint32_t{1} << h) != q || h % 2 == 0) {
    throw SuzukiError("q must be 2^(2e+1) with e >= 1");
  }
  return make_field(2, h);
}

Point point_of(const FieldPtr& f, Elem x, Elem y, Elem z, Elem t) {
  return Vector(f, std::vector<Elem>{x, y, z, t}).to_point();
}

std::vector<Point> tits_ovoid(std::uint32_t q) {
  auto f = suzuki_field(q);
  const Field& k = *f;
  const std::int64_t s = sigma_exp(k);
  std::vector<Point> out;
  for (Elem c = 1; c < q; ++c) {
    out.push_back(point_of(f, c, 0, 0, 0));
    out.push_back(point_of(f, 0, 0, 0, c));
  }
  for (Elem l = 0; l < q; ++l) {
    for (Elem w = 0; w < q; ++w) {
      if (l == 0 && w == 0) continue;
      const Elem a = k.add(k.add(zpow(k, l, s + 2), k.mul(l, w)), zpow(k, w, s));
      for (Elem m = 1; m < q; ++m) {
        const Elem c = k.inv(k.pow(m, s + 2));
        out.push_back(point_of(f, k.mul(c, a), k.mul(c, w), k.mul(c, l), c));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Subspace> luneburg_spread(std::uint32_t q) {
  auto f = suzuki_field(q);
  const Field& k = *f;
  const std::int64_t s = sigma_exp(k);
  std::vector<Subspace> out;
  std::vector<Vector> gens{Vector(f, std::vector<Elem>{1, 0, 0, 0}), Vector(f, std::vector<Elem>{0, 1, 0, 0})};
  out.push_back(canonical_subspace(gens, k.h()));
  for (Elem l = 0; l < q; ++l) {
    for (Elem w = 0; w < q; ++w) {
      // Rows for (x,y) = (1,0) and (0,1).
      const Elem a = k.add(k.add(zpow(k, l, s + 2), k.mul(l, w)), zpow(k, w, s));
      const Elem b = k.add(zpow(k, l, s + 1), w);
      gens = {Vector(f, std::vector<Elem>{a, w, l, 1}), Vector(f, std::vector<Elem>{b, zpow(k, l, s), 1, 0})};
      out.push_back(canonical_subspace(gens, k.h()));
    }
  }
  return out;
}

bool is_spread(std::span<const Subspace> s, const PointSpace& space) {
  std::vector<char> hit(space.size(), 0);
  std::uint64_t covered = 1;
  for (const auto& comp : s) {
    for (Point x : comp.elements()) {
      if (x == 0) continue;
      if (hit[x]) return false;
      hit[x] = 1;
      ++covered;
    }
  }
  return covered == space.size();
}

SuzukiContext make_suzuki_context(std::uint32_t q) {
  SuzukiContext ctx;
  ctx.field = suzuki_field(q);
  ctx.q = q;
  ctx.e = (ctx.field->h() - 1) / 2;
  ctx.sz = atlas("Sz", AtlasParams{.q = q});
  ctx.space = ctx.sz.point_space();
  ctx.ovoid = tits_ovoid(q);
  ctx.in_ovoid.assign(ctx.space.size(), 0);
  for (Point x : ctx.ovoid) ctx.in_ovoid[x] = 1;
  ctx.spread = luneburg_spread(q);
  return ctx;
}

std::vector<Point> family_block_literal(std::uint32_t q, const SuzukiTuple& t) {
  auto f = suzuki_field(q);
  const Field& k = *f;
  const std::int64_t s = sigma_exp(k);
  std::vector<Point> out;
  for (Elem m1 = 0; m1 < q; ++m1) {
    for (Elem m2 = 0; m2 < q; ++m2) {
      out.push_back(point_of(f, k.mul(zpow(k, m1, s + 2), t.x0), k.mul(zpow(k, m1, s), t.y0),
                             k.mul(zpow(k, m2, -s), t.z0), k.mul(zpow(k, m2, -s - 2), t.t0)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subspace family_block(std::uint32_t q, const SuzukiTuple& t) {
  auto f = suzuki_field(q);
  const Field& k = *f;
  if ((t.x0 == 0 && t.y0 == 0) || (t.z0 == 0 && t.t0 == 0)) {
    throw SuzukiError("tuple needs (x0,y0) and (z0,t0) nonzero");
  }
  const std::uint64_t want = std::uint64_t{q} * q;
  auto literal = family_block_literal(q, t);
  Subspace b = gf2_span(f, literal);
  if (literal.size() == want && b.size() == want) return b;
  // The literal set is not GF(2)-closed: take the span of the K-orbit pairing
  // x with z and y with t, which is the K-invariant subspace through the tuple.
  const std::int64_t s = sigma_exp(k);
  std::vector<Point> paired;
  for (Elem m1 = 0; m1 < q; ++m1) {
    for (Elem m2 = 0; m2 < q; ++m2) {
      paired.push_back(point_of(f, k.mul(zpow(k, m1, s + 2), t.x0), k.mul(zpow(k, m2, s), t.y0),
                                k.mul(zpow(k, m1, -s), t.z0), k.mul(zpow(k, m2, -s - 2), t.t0)));
    }
  }
  b = gf2_span(f, paired);
  if (b.size() != want) throw SuzukiError("block of the tuple is not a GF(2)-subspace of size q^2");
  return b;
}

bool intorb_condition1(const FieldPtr& f, const SuzukiTuple& t) {
  const Field& k = *f;
  const std::int64_t s = sigma_exp(k);
  return k.mul(t.x0, zpow(k, t.z0, s + 1)) == k.mul(zpow(k, t.y0, s + 1), t.t0);
}

int zeta_fixed_points(std::uint32_t q, const SuzukiTuple& t) {
  auto f = suzuki_field(q);
  const Field& k = *f;
  if (!t.x0 || !t.y0 || !t.z0 || !t.t0) throw SuzukiError("zeta needs an all-nonzero tuple");
  if (intorb_condition1(f, t)) throw SuzukiError("zeta needs x0 z0^(s+1) != y0^(s+1) t0");
  const std::int64_t s = sigma_exp(k);
  const Elem a = k.div(t.y0, t.t0), b = k.div(t.z0, t.t0), c = k.div(t.x0, t.t0);
  const Elem num0 = k.pow(b, s + 2), den0 = k.mul(b, a), as = k.pow(a, s);
  int fixed = 0;
  for (Elem x = 1; x < q; ++x) {
    const Elem xs = k.pow(x, s);
    const Elem den = k.add(k.mul(c, xs), den0);
    if (den == 0) continue;
    if (k.div(k.add(k.mul(as, xs), num0), den) == x) ++fixed;
  }
  return fixed;
}

Family classify_family(std::uint32_t q, const SuzukiTuple& t) {
  auto f = suzuki_field(q);
  if ((t.x0 == 0 && t.y0 == 0) || (t.z0 == 0 && t.t0 == 0)) return Family::kNotABlock;
  if ((t.y0 == 0 && t.t0 == 0) || (t.x0 == 0 && t.z0 == 0)) return Family::kFamily1;
  if (!t.x0 || !t.y0 || !t.z0 || !t.t0) return Family::kNotABlock;
  if (intorb_condition1(f, t)) {
    return (t.z0 == t.y0 && t.t0 == t.x0) ? Family::kFamily2 : Family::kFamily3;
  }
  return zeta_fixed_points(q, t) == 1 ? Family::kFamily4 : Family::kNotABlock;
}

std::vector<SuzukiTuple> family4_search(std::uint32_t q, unsigned threads) {
  suzuki_field(q);
  threads = std::max(1u, threads);
  std::vector<SuzukiTuple> out;
  std::mutex mu;
  auto work = [&](unsigned w) {
    std::vector<SuzukiTuple> local;
    for (Elem y0 = 1 + w; y0 < q; y0 += threads) {
      for (Elem z0 = 1; z0 < q; ++z0) {
        for (Elem t0 = 1; t0 < q; ++t0) {
          SuzukiTuple t{1, y0, z0, t0};
          if (classify_family(q, t) == Family::kFamily4) local.push_back(t);
        }
      }
    }
    std::lock_guard lock(mu);
    out.insert(out.end(), local.begin(), local.end());
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ovoid_meet(const Subspace& b, const SuzukiContext& ctx) {
  std::size_t n = 0;
  for (Point x : b.elements()) n += ctx.on_ovoid(x);
  return n;
}

TangencyReport tangency_check(const Subspace& b, const SuzukiContext& ctx) {
  const Field& k = *ctx.field;
  for (Point x : b.basis()) {
    Vector v = Vector::from_point(ctx.field, 4, x).scaled(k.primitive());
    if (!b.contains(v.to_point())) throw SuzukiError("block is not GF(q)-linear");
  }
  TangencyReport rep;
  std::vector<Point> meet;
  for (Point x : b.elements()) {
    if (ctx.on_ovoid(x)) meet.push_back(x);
  }
  rep.meet = meet.size();
  if (!meet.empty()) {
    std::vector<Vector> one{Vector::from_point(ctx.field, 4, meet.front())};
    Subspace line = canonical_subspace(one, k.h());
    rep.one_point = std::all_of(meet.begin(), meet.end(), [&](Point x) { return line.contains(x); });
  }
  rep.in_spread = std::find(ctx.spread.begin(), ctx.spread.end(), b) != ctx.spread.end();
  if (rep.meet == ctx.q - 1 && rep.one_point && !rep.in_spread) rep.verdict = Tangency::kTangentNotInSpread;
  return rep;
}

}  // namespace ftd
