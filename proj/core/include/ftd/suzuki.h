#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ftd/group.h"

namespace ftd {

class SuzukiError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuzukiTuple {
  Elem x0 = 0, y0 = 0, z0 = 0, t0 = 0;
  friend bool operator==(const SuzukiTuple&, const SuzukiTuple&) = default;
  friend auto operator<=>(const SuzukiTuple&, const SuzukiTuple&) = default;
};

enum class Family { kFamily1, kFamily2, kFamily3, kFamily4, kNotABlock };
std::string to_string(Family f);

// q = 2^(2e+1) with the Suzuki group, its short orbit and the Luneburg spread on V_4(q).
struct SuzukiContext {
  std::uint32_t q = 0, e = 0;
  FieldPtr field;
  GenGroup sz;
  PointSpace space;
  std::vector<Point> ovoid;  // sorted
  std::vector<char> in_ovoid;
  std::vector<Subspace> spread;

  bool on_ovoid(Point x) const { return in_ovoid[x] != 0; }
};

SuzukiContext make_suzuki_context(std::uint32_t q);
FieldPtr suzuki_field(std::uint32_t q);

Point point_of(const FieldPtr& f, Elem x, Elem y, Elem z, Elem t);

std::vector<Point> tits_ovoid(std::uint32_t q);
std::vector<Subspace> luneburg_spread(std::uint32_t q);
bool is_spread(std::span<const Subspace> s, const PointSpace& space);

// The block of the tuple as a GF(2)-subspace with q^2 elements.
Subspace family_block(std::uint32_t q, const SuzukiTuple& tup);
// The set {(m1^(s+2) x0, m1^s y0, m2^-s z0, m2^(-s-2) t0)} exactly as written.
std::vector<Point> family_block_literal(std::uint32_t q, const SuzukiTuple& tup);

Family classify_family(std::uint32_t q, const SuzukiTuple& tup);
int zeta_fixed_points(std::uint32_t q, const SuzukiTuple& tup);
// All-nonzero tuples with x0 = 1 satisfying x0 z0^(s+1) = y0^(s+1) t0.
bool intorb_condition1(const FieldPtr& f, const SuzukiTuple& tup);

// All Family 4 tuples with x0 = 1, sorted.
std::vector<SuzukiTuple> family4_search(std::uint32_t q, unsigned threads = 1);

enum class Tangency { kTangentNotInSpread, kOther };
struct TangencyReport {
  Tangency verdict = Tangency::kOther;
  std::size_t meet = 0;  // |B ∩ O|
  bool one_point = false;
  bool in_spread = false;
};
TangencyReport tangency_check(const Subspace& b, const SuzukiContext& ctx);

std::size_t ovoid_meet(const Subspace& b, const SuzukiContext& ctx);

}  // namespace ftd
