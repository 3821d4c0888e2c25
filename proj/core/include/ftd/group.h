#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ftd/linalg.h"

namespace ftd {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public GroupError {
 public:
  using GroupError::GroupError;
};

inline constexpr std::size_t kOrbitCap = std::size_t{1} << 25;
inline constexpr std::size_t kElementCap = std::size_t{1} << 24;

// x -> xA + t
struct AffineMap {
  Matrix linear;
  Vector shift;

  static AffineMap identity(const FieldPtr& field, std::size_t n);
  static AffineMap from_linear(Matrix a);
  static AffineMap translation(Vector t);

  Vector apply(const Vector& x) const { return x * linear + shift; }
  // This map followed by next.
  AffineMap then(const AffineMap& next) const;
  AffineMap inverse() const;
  bool is_linear() const { return shift.is_zero(); }
  bool is_identity() const { return linear.is_identity() && shift.is_zero(); }
  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.linear == b.linear && a.shift == b.shift;
  }
};

// (A1,t1) o (A2,t2) = (A1 A2, t1 A2 + t2)
inline AffineMap compose(const AffineMap& a, const AffineMap& b) { return a.then(b); }

struct GenGroup {
  std::string name;
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<AffineMap> gens;
  std::optional<std::uint64_t> known_order;
  bool contains_translations = false;
  std::optional<BilinearForm> form;  // declared invariant form of the linear part

  PointSpace point_space() const;
  bool is_linear() const;
  std::vector<Matrix> linear_parts() const;
};

// An affine map of GF(p)^N stored by the images of the unit points.
struct PrimeAffine {
  std::vector<Point> rows;
  Point shift = 0;

  static PrimeAffine from(const AffineMap& m);
  static PrimeAffine identity(const PointSpace& space);
  Point apply(const PointSpace& space, Point x) const;
  Point apply_linear(const PointSpace& space, Point x) const;
  PrimeAffine then(const PointSpace& space, const PrimeAffine& next) const;
  friend bool operator==(const PrimeAffine&, const PrimeAffine&) = default;
};

using Block = std::vector<Point>;  // sorted point indices

struct BlockHash {
  std::size_t operator()(const Block& b) const;
};

// Generators of a group acting on the points of V as prime-level maps, with
// permutation tables when V is small enough.
class PointAction {
 public:
  explicit PointAction(const GenGroup& g, std::uint64_t table_limit = std::uint64_t{1} << 20);
  PointAction(PointSpace space, std::vector<PrimeAffine> maps,
              std::uint64_t table_limit = std::uint64_t{1} << 20);

  const PointSpace& space() const { return space_; }
  std::size_t num_gens() const { return maps_.size(); }
  const PrimeAffine& map(std::size_t g) const { return maps_[g]; }
  bool is_linear() const;

  Point image(Point x, std::size_t g) const {
    return tables_.empty() ? maps_[g].apply(space_, x) : tables_[g][x];
  }
  Block block_image(const Block& b, std::size_t g) const;
  Subspace subspace_image(const Subspace& s, std::size_t g) const;

 private:
  PointSpace space_;
  std::vector<PrimeAffine> maps_;
  std::vector<std::vector<Point>> tables_;
};

template <class T, class Hash = std::hash<T>>
struct Orbit {
  std::vector<T> elements;
  std::vector<std::int64_t> parent;  // -1 for the seed
  std::vector<std::int32_t> via;     // generator leading from the parent
  std::unordered_map<T, std::size_t, Hash> index;

  std::size_t size() const { return elements.size(); }
  bool contains(const T& x) const { return index.count(x) != 0; }
  // Generator indices carrying the seed to element i.
  std::vector<int> word(std::size_t i) const {
    std::vector<int> w;
    for (std::int64_t j = static_cast<std::int64_t>(i); parent[j] >= 0; j = parent[j]) w.push_back(via[j]);
    return {w.rbegin(), w.rend()};
  }
};

// Breadth-first orbit in generator order; image(x, g) must return canonical forms.
template <class T, class Hash, class Image>
Orbit<T, Hash> orbit_bfs(T seed, std::size_t ngens, Image&& image, std::size_t cap = kOrbitCap) {
  Orbit<T, Hash> o;
  o.elements.push_back(seed);
  o.parent.push_back(-1);
  o.via.push_back(-1);
  o.index.emplace(std::move(seed), 0);
  for (std::size_t i = 0; i < o.elements.size(); ++i) {
    for (std::size_t g = 0; g < ngens; ++g) {
      T y = image(o.elements[i], g);
      if (o.index.count(y)) continue;
      if (o.elements.size() >= cap) throw CapExceeded("orbit exceeds cap");
      o.index.emplace(y, o.elements.size());
      o.elements.push_back(std::move(y));
      o.parent.push_back(static_cast<std::int64_t>(i));
      o.via.push_back(static_cast<std::int32_t>(g));
    }
  }
  return o;
}

using PointOrbit = Orbit<Point>;
using BlockOrbit = Orbit<Block, BlockHash>;
using SubspaceOrbit = Orbit<Subspace, SubspaceHash>;
using Flag = std::pair<Point, Block>;
struct FlagHash {
  std::size_t operator()(const Flag& f) const { return BlockHash{}(f.second) * 31 + f.first; }
};
using FlagOrbit = Orbit<Flag, FlagHash>;

PointOrbit point_orbit(const PointAction& a, Point seed, std::size_t cap = kOrbitCap);
BlockOrbit block_orbit(const PointAction& a, const Block& seed, std::size_t cap = kOrbitCap);
SubspaceOrbit subspace_orbit(const PointAction& a, const Subspace& seed, std::size_t cap = kOrbitCap);
FlagOrbit flag_orbit(const PointAction& a, const Flag& seed, std::size_t cap = kOrbitCap);
// Orbits on all points of V (including 0), each sorted, ordered by least element.
std::vector<std::vector<Point>> point_orbits(const PointAction& a);

std::uint64_t stabilizer_order(std::uint64_t group_order, std::uint64_t orbit_len);

// Transversal elements u_x as affine maps, indexed like the orbit.
std::vector<AffineMap> transversal(const GenGroup& g, std::span<const std::int64_t> parent,
                                   std::span<const std::int32_t> via);

// Stabilizer of the orbit seed via Schreier generators u_x g u_{xg}^-1, deduplicated
// and greedily reduced when the stabilizer is enumerable.
template <class T, class Hash, class Image>
GenGroup schreier_stabilizer_generators(const GenGroup& g, const Orbit<T, Hash>& orbit, Image&& image);

class ElementSet {
 public:
  explicit ElementSet(PointSpace space) : space_(std::move(space)), stride_(space_.dim() + 1) {}
  const PointSpace& space() const { return space_; }
  std::size_t size() const { return count_; }
  PrimeAffine element(std::size_t i) const;
  // Returns the index and whether it was new.
  std::pair<std::size_t, bool> insert(const PrimeAffine& m);
  bool contains(const PrimeAffine& m) const { return find(m) >= 0; }
  std::int64_t find(const PrimeAffine& m) const;

 private:
  std::size_t hash_at(const Point* rows) const;
  bool equal_at(std::size_t i, const PrimeAffine& m) const;
  void grow();

  PointSpace space_;
  std::size_t stride_;
  std::vector<Point> data_;
  std::vector<std::uint32_t> table_;  // element index + 1, 0 = empty
  std::size_t count_ = 0;
};

// All group elements by closure; throws GroupError above cap.
ElementSet enumerate_elements(const GenGroup& g, std::size_t cap = kElementCap);
ElementSet enumerate_elements(const PointSpace& space, std::span<const PrimeAffine> gens,
                              std::size_t cap = kElementCap);

std::uint64_t element_order(const AffineMap& m, std::uint64_t cap = std::uint64_t{1} << 32);

// ---------------------------------------------------------------------------

template <class T, class Hash, class Image>
GenGroup schreier_stabilizer_generators(const GenGroup& g, const Orbit<T, Hash>& orbit, Image&& image) {
  const auto u = transversal(g, orbit.parent, orbit.via);
  std::vector<AffineMap> cands;
  std::vector<PrimeAffine> seen_keys;
  ElementSet seen(g.point_space());
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t k = 0; k < g.gens.size(); ++k) {
      auto it = orbit.index.find(image(orbit.elements[i], k));
      if (it == orbit.index.end()) throw GroupError("orbit is not closed under the generators");
      AffineMap s = u[i].then(g.gens[k]).then(u[it->second].inverse());
      if (s.is_identity()) continue;
      if (seen.insert(PrimeAffine::from(s)).second) cands.push_back(std::move(s));
    }
  }
  GenGroup out{g.name + "_stab", g.field, g.dim, {}, std::nullopt, false, g.form};
  if (g.known_order) out.known_order = stabilizer_order(*g.known_order, orbit.size());
  // Greedy reduction: keep a candidate only if it is outside the current closure.
  const PointSpace space = g.point_space();
  try {
    std::vector<PrimeAffine> kept;
    ElementSet closure = enumerate_elements(space, kept, std::size_t{1} << 20);
    for (auto& s : cands) {
      PrimeAffine ps = PrimeAffine::from(s);
      if (closure.contains(ps)) continue;
      kept.push_back(ps);
      out.gens.push_back(s);
      closure = enumerate_elements(space, kept, std::size_t{1} << 20);
    }
    if (out.known_order && closure.size() != *out.known_order) {
      throw GroupError("Schreier closure order disagrees with orbit-stabilizer");
    }
    out.known_order = closure.size();
  } catch (const CapExceeded&) {
    out.gens = std::move(cands);
  }
  return out;
}

}  // namespace ftd
