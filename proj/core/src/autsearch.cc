#include "ftd/autsearch.h"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_set>

namespace ftd {

namespace {

class Searcher {
 public:
  Searcher(const std::vector<Block>& blocks0, PointSpace space)
      : space_(std::move(space)), v_(space_.size()), blocks_(blocks0.begin(), blocks0.end()), list_(blocks0) {
    pd_.assign(v_ * v_, 0);
    for (const auto& b : list_) {
      for (Point x : b) {
        for (Point y : b) ++pd_[x * v_ + y];
      }
    }
    // Class of a point: its degree and sorted pair-degree profile.
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    cls_.resize(v_);
    for (Point x = 0; x < v_; ++x) {
      std::vector<std::uint32_t> prof(pd_.begin() + x * v_, pd_.begin() + (x + 1) * v_);
      const std::uint32_t deg = prof[x];
      std::sort(prof.begin(), prof.end());
      prof.push_back(deg);
      cls_[x] = ids.emplace(std::move(prof), static_cast<std::uint32_t>(ids.size())).first->second;
    }
  }

  std::uint64_t nodes = 0, prunes = 0;

  bool same_class(Point a, Point b) const { return cls_[a] == cls_[b]; }

  // Finds images of e_j, ..., e_{n-1} extending img (defined on the span of
  // e_0..e_{j-1}, i.e. on points < p^j) to a full stabilizing map.
  bool extend(std::vector<Point>& img, std::uint32_t j, const std::vector<std::vector<Point>>& order) {
    ++nodes;
    const std::uint32_t n = space_.dim();
    if (j == n) return full_check(img);
    const std::uint64_t span = pw(j);
    std::vector<char> used(v_, 0);
    for (std::uint64_t x = 0; x < span; ++x) used[img[x]] = 1;
    for (Point c : order[j]) {
      if (used[c] || !same_class(space_.unit(j), c)) continue;
      if (try_assign(img, j, c)) {
        if (extend(img, j + 1, order)) return true;
      } else {
        ++prunes;
      }
    }
    img.resize(span);
    return false;
  }

  // Sets e_j -> c and checks classes and pair degrees on the new points.
  bool try_assign(std::vector<Point>& img, std::uint32_t j, Point c) {
    const std::uint64_t span = pw(j);
    img.resize(span * space_.p());
    for (std::uint32_t a = 1; a < space_.p(); ++a) {
      const Point ca = space_.scale(c, a);
      for (std::uint64_t x = 0; x < span; ++x) {
        const Point src = static_cast<Point>(x + a * span);
        const Point dst = space_.add(img[x], ca);
        if (cls_[src] != cls_[dst]) return false;
        img[src] = dst;
      }
    }
    const std::uint64_t total = span * space_.p();
    for (std::uint64_t x = span; x < total; ++x) {
      for (std::uint64_t y = 0; y < total; ++y) {
        if (pd_[x * v_ + y] != pd_[std::uint64_t{img[x]} * v_ + img[y]]) return false;
      }
    }
    return true;
  }

  bool full_check(const std::vector<Point>& img) const {
    for (const auto& b : list_) {
      Block out;
      out.reserve(b.size());
      for (Point x : b) out.push_back(img[x]);
      std::sort(out.begin(), out.end());
      if (!blocks_.count(out)) return false;
    }
    return true;
  }

  PrimeAffine to_map(const std::vector<Point>& img) const {
    PrimeAffine m;
    for (std::uint32_t j = 0; j < space_.dim(); ++j) m.rows.push_back(img[space_.unit(j)]);
    return m;
  }

  std::uint64_t pw(std::uint32_t j) const { return ipow(space_.p(), j); }

  static std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
  }

  const PointSpace& space() const { return space_; }

 private:
  PointSpace space_;
  std::uint64_t v_;
  std::unordered_set<Block, BlockHash> blocks_;
  std::vector<Block> list_;
  std::vector<std::uint32_t> pd_;
  std::vector<std::uint32_t> cls_;
};

Matrix prime_matrix(const PointSpace& space, const PrimeAffine& m) {
  auto f = make_field(space.p(), 1);
  Matrix a(f, space.dim(), space.dim());
  for (std::uint32_t i = 0; i < space.dim(); ++i) {
    for (std::uint32_t j = 0; j < space.dim(); ++j) a.at(i, j) = space.digit(m.rows[i], j);
  }
  return a;
}

}  // namespace

bool stabilizes_blockset(const std::vector<Block>& blocks0, const PointSpace& space, const PrimeAffine& a) {
  std::unordered_set<Block, BlockHash> set(blocks0.begin(), blocks0.end());
  for (const auto& b : blocks0) {
    Block out;
    for (Point x : b) out.push_back(a.apply(space, x));
    std::sort(out.begin(), out.end());
    if (!set.count(out)) return false;
  }
  return true;
}

GenGroup group_from_prime_matrices(std::string name, std::uint32_t p, const std::vector<Matrix>& gens,
                                   std::optional<std::uint64_t> order) {
  auto f = make_field(p, 1);
  const std::size_t n = gens.empty() ? 0 : gens.front().rows();
  GenGroup g{std::move(name), f, n, {}, order, false, std::nullopt};
  for (const auto& m : gens) g.gens.push_back(AffineMap::from_linear(m));
  return g;
}

StabilizerResult linear_blockset_stabilizer(const std::vector<Block>& blocks0, std::uint32_t p, std::uint32_t n,
                                            const AutSearchOptions& opts) {
  const PointSpace space(p, n);
  if (space.size() > 4096) throw GroupError("aut-search needs p^n <= 2^12");
  if (blocks0.empty()) throw GroupError("aut-search needs a nonempty block set");
  Searcher s(blocks0, space);
  std::mt19937_64 rng(opts.seed);

  // Candidate images of e_j: points in the class of e_j, optionally shuffled.
  std::vector<std::vector<Point>> order(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    for (Point c = 1; c < space.size(); ++c) {
      if (s.same_class(space.unit(j), c)) order[j].push_back(c);
    }
    if (opts.seed) std::shuffle(order[j].begin(), order[j].end(), rng);
  }

  StabilizerResult res;
  std::vector<PrimeAffine> gens;
  res.order = 1;
  res.orbit_lengths.assign(n, 1);
  for (std::uint32_t jj = n; jj-- > 0;) {
    const Point ej = space.unit(jj);
    // Orbit of e_j under the generators found so far (all fix e_0..e_{j-1}).
    std::vector<char> in_orbit(space.size(), 0);
    std::vector<Point> orbit{ej};
    in_orbit[ej] = 1;
    auto close = [&]() {
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (const auto& g : gens) {
          const Point y = g.apply_linear(space, orbit[i]);
          if (!in_orbit[y]) {
            in_orbit[y] = 1;
            orbit.push_back(y);
          }
        }
      }
    };
    close();
    for (Point c : order[jj]) {
      if (in_orbit[c] || c < Searcher::ipow(p, jj)) continue;
      std::vector<Point> img(Searcher::ipow(p, jj));
      for (Point x = 0; x < img.size(); ++x) img[x] = x;
      if (!s.try_assign(img, jj, c)) {
        ++s.prunes;
        continue;
      }
      if (!s.extend(img, jj + 1, order)) continue;
      gens.push_back(s.to_map(img));
      res.generators.push_back(prime_matrix(space, gens.back()));
      close();
    }
    res.orbit_lengths[jj] = orbit.size();
    res.order *= orbit.size();
  }
  res.nodes = s.nodes;
  res.prunes = s.prunes;
  res.generators_verified =
      std::all_of(gens.begin(), gens.end(), [&](const PrimeAffine& g) { return stabilizes_blockset(blocks0, space, g); });
  try {
    res.enumerated_order = enumerate_elements(space, gens, opts.enumeration_cap).size();
    res.certified = res.enumerated_order == res.order;
  } catch (const CapExceeded&) {
    res.certified = false;
  }
  return res;
}

}  // namespace ftd
