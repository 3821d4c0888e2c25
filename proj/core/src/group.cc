#include "ftd/group.h"

#include <algorithm>

namespace ftd {

AffineMap AffineMap::identity(const FieldPtr& field, std::size_t n) {
  return {Matrix::identity(field, n), Vector(field, n)};
}

AffineMap AffineMap::from_linear(Matrix a) {
  Vector t(a.field(), a.rows());
  return {std::move(a), std::move(t)};
}

AffineMap AffineMap::translation(Vector t) {
  Matrix a = Matrix::identity(t.field(), t.size());
  return {std::move(a), std::move(t)};
}

AffineMap AffineMap::then(const AffineMap& next) const {
  return {linear * next.linear, shift * next.linear + next.shift};
}

AffineMap AffineMap::inverse() const {
  Matrix inv = linear.inverse();
  Vector zero(shift.field(), shift.size());
  return {inv, zero - shift * inv};
}

PointSpace GenGroup::point_space() const {
  return PointSpace(field->p(), static_cast<std::uint32_t>(dim * field->h()));
}

bool GenGroup::is_linear() const {
  return std::all_of(gens.begin(), gens.end(), [](const AffineMap& m) { return m.is_linear(); });
}

std::vector<Matrix> GenGroup::linear_parts() const {
  std::vector<Matrix> out;
  for (const auto& m : gens) out.push_back(m.linear);
  return out;
}

PrimeAffine PrimeAffine::from(const AffineMap& m) {
  const FieldPtr& f = m.linear.field();
  const std::size_t n = m.linear.rows();
  PointSpace space(f->p(), static_cast<std::uint32_t>(n * f->h()));
  PrimeAffine out;
  for (std::uint32_t j = 0; j < space.dim(); ++j) {
    Vector e = Vector::from_point(f, n, space.unit(j));
    out.rows.push_back((e * m.linear).to_point());
  }
  out.shift = m.shift.to_point();
  return out;
}

PrimeAffine PrimeAffine::identity(const PointSpace& space) {
  PrimeAffine out;
  for (std::uint32_t j = 0; j < space.dim(); ++j) out.rows.push_back(space.unit(j));
  return out;
}

Point PrimeAffine::apply_linear(const PointSpace& space, Point x) const {
  Point r = 0;
  if (space.p() == 2) {
    for (std::uint32_t j = 0; x; ++j, x >>= 1) {
      if (x & 1) r ^= rows[j];
    }
    return r;
  }
  for (std::uint32_t j = 0; x; ++j) {
    std::uint32_t d = x % space.p();
    x /= space.p();
    if (d) r = space.add(r, space.scale(rows[j], d));
  }
  return r;
}

Point PrimeAffine::apply(const PointSpace& space, Point x) const {
  return space.add(apply_linear(space, x), shift);
}

PrimeAffine PrimeAffine::then(const PointSpace& space, const PrimeAffine& next) const {
  PrimeAffine out;
  out.rows.reserve(rows.size());
  for (Point r : rows) out.rows.push_back(next.apply_linear(space, r));
  out.shift = next.apply(space, shift);
  return out;
}

std::size_t BlockHash::operator()(const Block& b) const {
  std::size_t h = 1469598103934665603ull;
  for (Point x : b) h = (h ^ x) * 1099511628211ull;
  return h;
}

PointAction::PointAction(const GenGroup& g, std::uint64_t table_limit)
    : PointAction(g.point_space(), [&] {
        std::vector<PrimeAffine> maps;
        for (const auto& m : g.gens) maps.push_back(PrimeAffine::from(m));
        return maps;
      }(), table_limit) {}

PointAction::PointAction(PointSpace space, std::vector<PrimeAffine> maps, std::uint64_t table_limit)
    : space_(std::move(space)), maps_(std::move(maps)) {
  if (space_.size() <= table_limit) {
    for (const auto& m : maps_) {
      std::vector<Point> t(space_.size());
      for (Point x = 0; x < space_.size(); ++x) t[x] = m.apply(space_, x);
      tables_.push_back(std::move(t));
    }
  }
}

bool PointAction::is_linear() const {
  return std::all_of(maps_.begin(), maps_.end(), [](const PrimeAffine& m) { return m.shift == 0; });
}

Block PointAction::block_image(const Block& b, std::size_t g) const {
  Block out;
  out.reserve(b.size());
  for (Point x : b) out.push_back(image(x, g));
  std::sort(out.begin(), out.end());
  return out;
}

Subspace PointAction::subspace_image(const Subspace& s, std::size_t g) const {
  if (maps_[g].shift != 0) throw GroupError("subspace action needs a linear generator");
  Echelon e(space_);
  for (Point b : s.basis()) e.insert(maps_[g].apply_linear(space_, b));
  return Subspace(space_, s.sub_degree(), e.canonical_basis());
}

PointOrbit point_orbit(const PointAction& a, Point seed, std::size_t cap) {
  return orbit_bfs<Point, std::hash<Point>>(seed, a.num_gens(),
                                            [&](Point x, std::size_t g) { return a.image(x, g); }, cap);
}

BlockOrbit block_orbit(const PointAction& a, const Block& seed, std::size_t cap) {
  return orbit_bfs<Block, BlockHash>(seed, a.num_gens(),
                                     [&](const Block& b, std::size_t g) { return a.block_image(b, g); }, cap);
}

SubspaceOrbit subspace_orbit(const PointAction& a, const Subspace& seed, std::size_t cap) {
  return orbit_bfs<Subspace, SubspaceHash>(
      seed, a.num_gens(), [&](const Subspace& s, std::size_t g) { return a.subspace_image(s, g); }, cap);
}

FlagOrbit flag_orbit(const PointAction& a, const Flag& seed, std::size_t cap) {
  return orbit_bfs<Flag, FlagHash>(
      seed, a.num_gens(),
      [&](const Flag& f, std::size_t g) { return Flag{a.image(f.first, g), a.block_image(f.second, g)}; }, cap);
}

std::vector<std::vector<Point>> point_orbits(const PointAction& a) {
  const std::uint64_t v = a.space().size();
  std::vector<char> seen(v, 0);
  std::vector<std::vector<Point>> out;
  for (Point s = 0; s < v; ++s) {
    if (seen[s]) continue;
    std::vector<Point> orb{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (std::size_t g = 0; g < a.num_gens(); ++g) {
        Point y = a.image(orb[i], g);
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::uint64_t stabilizer_order(std::uint64_t group_order, std::uint64_t orbit_len) {
  if (orbit_len == 0 || group_order % orbit_len != 0) {
    throw GroupError("orbit length does not divide the group order");
  }
  return group_order / orbit_len;
}

std::vector<AffineMap> transversal(const GenGroup& g, std::span<const std::int64_t> parent,
                                   std::span<const std::int32_t> via) {
  std::vector<AffineMap> u;
  u.reserve(parent.size());
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (parent[i] < 0) {
      u.push_back(AffineMap::identity(g.field, g.dim));
    } else {
      u.push_back(u[parent[i]].then(g.gens[via[i]]));
    }
  }
  return u;
}

PrimeAffine ElementSet::element(std::size_t i) const {
  PrimeAffine m;
  const Point* p = data_.data() + i * stride_;
  m.rows.assign(p, p + stride_ - 1);
  m.shift = p[stride_ - 1];
  return m;
}

std::size_t ElementSet::hash_at(const Point* rows) const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t j = 0; j < stride_; ++j) h = (h ^ rows[j]) * 1099511628211ull;
  return h ^ (h >> 29);
}

bool ElementSet::equal_at(std::size_t i, const PrimeAffine& m) const {
  const Point* p = data_.data() + i * stride_;
  return std::equal(m.rows.begin(), m.rows.end(), p) && p[stride_ - 1] == m.shift;
}

void ElementSet::grow() {
  std::size_t cap = table_.empty() ? 64 : table_.size() * 2;
  table_.assign(cap, 0);
  for (std::size_t i = 0; i < count_; ++i) {
    std::size_t slot = hash_at(data_.data() + i * stride_) & (cap - 1);
    while (table_[slot] != 0) slot = (slot + 1) & (cap - 1);
    table_[slot] = static_cast<std::uint32_t>(i + 1);
  }
}

std::int64_t ElementSet::find(const PrimeAffine& m) const {
  if (table_.empty()) return -1;
  std::vector<Point> key(m.rows);
  key.push_back(m.shift);
  std::size_t slot = hash_at(key.data()) & (table_.size() - 1);
  while (table_[slot] != 0) {
    if (equal_at(table_[slot] - 1, m)) return table_[slot] - 1;
    slot = (slot + 1) & (table_.size() - 1);
  }
  return -1;
}

std::pair<std::size_t, bool> ElementSet::insert(const PrimeAffine& m) {
  if (m.rows.size() + 1 != stride_) throw GroupError("element of the wrong dimension");
  std::int64_t f = find(m);
  if (f >= 0) return {static_cast<std::size_t>(f), false};
  if ((count_ + 1) * 2 > table_.size()) grow();
  data_.insert(data_.end(), m.rows.begin(), m.rows.end());
  data_.push_back(m.shift);
  std::size_t slot = hash_at(data_.data() + count_ * stride_) & (table_.size() - 1);
  while (table_[slot] != 0) slot = (slot + 1) & (table_.size() - 1);
  table_[slot] = static_cast<std::uint32_t>(count_ + 1);
  return {count_++, true};
}

ElementSet enumerate_elements(const PointSpace& space, std::span<const PrimeAffine> gens, std::size_t cap) {
  if (cap > kElementCap) throw GroupError("element cap above 2^24");
  ElementSet set(space);
  set.insert(PrimeAffine::identity(space));
  for (std::size_t i = 0; i < set.size(); ++i) {
    const PrimeAffine e = set.element(i);
    for (const auto& g : gens) {
      auto [idx, fresh] = set.insert(e.then(space, g));
      if (fresh && set.size() > cap) throw CapExceeded("group exceeds the element cap");
    }
  }
  return set;
}

ElementSet enumerate_elements(const GenGroup& g, std::size_t cap) {
  std::vector<PrimeAffine> gens;
  for (const auto& m : g.gens) gens.push_back(PrimeAffine::from(m));
  return enumerate_elements(g.point_space(), gens, cap);
}

std::uint64_t element_order(const AffineMap& m, std::uint64_t cap) {
  const PointSpace space(m.linear.field()->p(),
                         static_cast<std::uint32_t>(m.linear.rows() * m.linear.field()->h()));
  const PrimeAffine base = PrimeAffine::from(m);
  const PrimeAffine id = PrimeAffine::identity(space);
  PrimeAffine x = base;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x == id) return k;
    x = x.then(space, base);
  }
  throw CapExceeded("element order exceeds cap");
}

}  // namespace ftd
