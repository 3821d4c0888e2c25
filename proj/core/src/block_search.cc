#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "ftd/atlas.h"
#include "ftd/design.h"

namespace ftd {

namespace {

// All dim-d GF(p)-subspaces of GF(p)^N, deduplicated by canonical basis.
std::vector<Subspace> all_subspaces(const PointSpace& space, std::size_t d) {
  std::set<Subspace> found;
  std::function<void(Echelon&, Point)> rec = [&](Echelon& e, Point from) {
    if (e.rank() == d) {
      found.insert(Subspace(space, 1, e.canonical_basis()));
      return;
    }
    for (Point x = from; x < space.size(); ++x) {
      if (e.contains(x)) continue;
      Echelon next = e;
      next.insert(x);
      rec(next, x + 1);
    }
  };
  Echelon e(space);
  rec(e, 1);
  return {found.begin(), found.end()};
}

PrimeAffine prime_inverse(const PointSpace& space, const PrimeAffine& m) {
  auto f = make_field(space.p(), 1);
  const std::uint32_t n = space.dim();
  Matrix a(f, n, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) a.at(i, j) = space.digit(m.rows[i], j);
  }
  Matrix inv = a.inverse();
  PrimeAffine out;
  for (std::uint32_t i = 0; i < n; ++i) {
    Point r = 0;
    for (std::uint32_t j = 0; j < n; ++j) r = space.add(r, space.scale(space.unit(j), inv.at(i, j)));
    out.rows.push_back(r);
  }
  return out;
}

std::vector<std::size_t> cyclic_key(const ElementSet& els, const PrimeAffine& g) {
  const PointSpace& space = els.space();
  std::vector<std::size_t> key;
  PrimeAffine x = g;
  const PrimeAffine id = PrimeAffine::identity(space);
  while (true) {
    key.push_back(static_cast<std::size_t>(els.find(x)));
    if (x == id) break;
    x = x.then(space, g);
  }
  std::sort(key.begin(), key.end());
  return key;
}

// One generator per conjugacy class of subgroups of prime order dividing n.
std::vector<PrimeAffine> prime_order_class_reps(const ElementSet& els, std::uint64_t n) {
  const PointSpace& space = els.space();
  const PrimeAffine id = PrimeAffine::identity(space);
  std::vector<PrimeAffine> inverses;
  inverses.reserve(els.size());
  for (std::size_t i = 0; i < els.size(); ++i) inverses.push_back(prime_inverse(space, els.element(i)));
  std::set<std::vector<std::size_t>> seen;
  std::vector<PrimeAffine> reps;
  for (std::size_t i = 0; i < els.size(); ++i) {
    const PrimeAffine g = els.element(i);
    if (g == id) continue;
    std::uint64_t ord = 1;
    for (PrimeAffine x = g; !(x == id); x = x.then(space, g)) ++ord;
    if (!is_prime(ord) || n % ord != 0) continue;
    auto key = cyclic_key(els, g);
    if (seen.count(key)) continue;
    reps.push_back(g);
    for (std::size_t j = 0; j < els.size(); ++j) {
      const PrimeAffine c = inverses[j].then(space, g).then(space, els.element(j));
      seen.insert(cyclic_key(els, c));
    }
  }
  return reps;
}

struct Checker {
  const PointSpace& space;
  const PointAction& act;
  std::uint64_t r;

  // Orbit of b under G0 when it has exactly r members and is closed under
  // moving each point of each block to 0.
  std::optional<std::vector<Block>> flag_orbit_through_zero(const Block& b) const {
    std::unordered_set<Block, BlockHash> seen{b};
    std::vector<Block> orbit{b};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t g = 0; g < act.num_gens(); ++g) {
        Block y = act.block_image(orbit[i], g);
        if (seen.insert(y).second) {
          if (orbit.size() >= r) return std::nullopt;
          orbit.push_back(std::move(y));
        }
      }
    }
    if (orbit.size() != r) return std::nullopt;
    for (Point x : b) {
      Block shifted;
      for (Point y : b) shifted.push_back(space.sub(y, x));
      std::sort(shifted.begin(), shifted.end());
      if (!seen.count(shifted)) return std::nullopt;
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
  }
};

}  // namespace

std::vector<SearchHit> base_block_search(const GenGroup& g0, std::uint64_t k, std::uint64_t lambda,
                                         SearchStats* stats) {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  if (!g0.is_linear()) throw DesignError("base block search needs a linear group");
  const PointSpace space = g0.point_space();
  if (space.size() > 4096) throw DesignError("base block search needs v <= 2^12");
  if (k * k != space.size()) throw DesignError("search needs v = k^2");
  const std::uint64_t r = lambda * (k + 1);
  const ElementSet els = enumerate_elements(g0);
  const std::uint64_t order = els.size();
  std::vector<SearchHit> hits;
  if (order % r != 0) return hits;
  const std::uint64_t stab = order / r;
  std::uint32_t m = 0;
  for (std::uint64_t x = 1; x < k; x *= space.p()) ++m;

  const PointAction act(g0);
  const GenGroup g = affine_closure(g0);
  std::set<std::vector<Block>> found;
  auto consider = [&](const Block& b, const std::vector<Block>& blocks0) {
    if (found.count(blocks0)) return;
    Design d;
    d.space = space;
    d.k = k;
    d.base_block = b;
    d.group_name = g.name;
    d.blocks0 = blocks0;
    LambdaReport rep = verify_2design(d, VerifyMode::kOrbitwise, &g0);
    if (!rep.ok || rep.lambda != lambda) return;
    found.insert(blocks0);
    hits.push_back({b, std::move(d), lambda});
    ++st.hits;
  };

  // Subspace candidates, one per G0-orbit.
  std::unordered_set<Subspace, SubspaceHash> covered;
  for (const auto& s : all_subspaces(space, m)) {
    ++st.subspace_candidates;
    if (covered.count(s)) continue;
    auto orbit = subspace_orbit(act, s);
    for (const auto& x : orbit.elements) covered.insert(x);
    if (orbit.size() != r) continue;
    std::vector<Block> blocks0;
    for (const auto& x : orbit.elements) blocks0.push_back(x.elements());
    std::sort(blocks0.begin(), blocks0.end());
    consider(s.elements(), blocks0);
  }

  // Unions of orbits of a prime-order subgroup of the block stabilizer.
  if (stab > 1) {
    const Checker check{space, act, r};
    for (const auto& h : prime_order_class_reps(els, stab)) {
      ++st.subgroups;
      const PointAction hact(space, {h});
      std::vector<std::vector<Point>> orbs;
      for (auto& o : point_orbits(hact)) {
        if (o.front() != 0) orbs.push_back(std::move(o));
      }
      Block cur{0};
      std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
        if (left == 0) {
          Block b = cur;
          std::sort(b.begin(), b.end());
          if (is_gf_p_subspace(space, b)) return;
          ++st.invariant_candidates;
          if (auto blocks0 = check.flag_orbit_through_zero(b)) consider(b, *blocks0);
          return;
        }
        for (std::size_t j = i; j < orbs.size(); ++j) {
          if (orbs[j].size() > left) continue;
          cur.insert(cur.end(), orbs[j].begin(), orbs[j].end());
          rec(j + 1, left - orbs[j].size());
          cur.resize(cur.size() - orbs[j].size());
        }
      };
      rec(0, k - 1);
    }
  }
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    return a.design.blocks0 < b.design.blocks0;
  });
  return hits;
}

std::optional<std::vector<std::vector<std::size_t>>> spread_decomposition(const Design& d, std::size_t parts) {
  const std::size_t n = d.blocks0.size();
  if (parts == 0 || n % parts != 0) return std::nullopt;
  const std::size_t size = n / parts;
  if ((d.v() - 1) != size * (d.k - 1)) return std::nullopt;
  std::vector<std::vector<char>> disjoint(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Point> common;
      std::set_intersection(d.blocks0[i].begin(), d.blocks0[i].end(), d.blocks0[j].begin(), d.blocks0[j].end(),
                            std::back_inserter(common));
      disjoint[i][j] = disjoint[j][i] = common.size() == 1;
    }
  }
  std::vector<int> part(n, -1);
  std::vector<std::vector<std::size_t>> groups;
  std::function<bool()> assign = [&]() -> bool {
    auto it = std::find(part.begin(), part.end(), -1);
    if (it == part.end()) return true;
    const std::size_t first = it - part.begin();
    const int id = static_cast<int>(groups.size());
    groups.push_back({first});
    part[first] = id;
    std::function<bool(std::size_t)> grow = [&](std::size_t from) -> bool {
      if (groups.back().size() == size) return assign();
      for (std::size_t c = from; c < n; ++c) {
        if (part[c] != -1) continue;
        const auto& g = groups.back();
        if (!std::all_of(g.begin(), g.end(), [&](std::size_t x) { return disjoint[x][c]; })) continue;
        part[c] = id;
        groups.back().push_back(c);
        if (grow(c + 1)) return true;
        groups.back().pop_back();
        part[c] = -1;
      }
      return false;
    };
    if (grow(first + 1)) return true;
    part[first] = -1;
    groups.pop_back();
    return false;
  };
  if (!assign()) return std::nullopt;
  return groups;
}

}  // namespace ftd
