#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftd {

using Elem = std::uint32_t;

class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// An element tagged with the field it belongs to.
struct FieldElem {
  std::uint32_t field_id = 0;
  Elem index = 0;
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

enum class FieldOp { kAdd, kSub, kMul, kInv, kPow, kNeg };
enum class TraceNorm { kTrace, kNorm };

inline constexpr std::uint64_t kFieldSizeCap = 1u << 20;
inline constexpr std::uint64_t kTableSizeCap = 1u << 16;

// GF(p^h). Element index = sum of c_i p^i where x = sum c_i w^i and w is the
// class of X modulo the bundled primitive modulus.
class Field {
 public:
  static FieldPtr make(std::uint32_t p, std::uint32_t h);

  std::uint32_t p() const { return p_; }
  std::uint32_t h() const { return h_; }
  std::uint32_t order() const { return q_; }
  std::uint32_t id() const { return (p_ << 5) | h_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem primitive() const { return prim_; }
  bool has_tables() const { return !exp_.empty(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;
  Elem scalar(std::int64_t c) const;  // image of the integer c

  // w^k for the primitive element w.
  Elem exp(std::uint64_t k) const;
  // Discrete logarithm base w; a must be nonzero.
  std::uint32_t log(Elem a) const;

  Elem frobenius(Elem x, std::uint32_t s) const;  // x^(p^s)
  Elem trace(Elem x, std::uint32_t d) const;      // into GF(p^d)
  Elem norm(Elem x, std::uint32_t d) const;
  bool in_subfield(Elem x, std::uint32_t d) const;
  // {1, t, ..., t^(d-1)} with t a generator of GF(p^d)*.
  std::vector<Elem> subfield_basis(std::uint32_t d) const;
  std::vector<Elem> subfield_elements(std::uint32_t d) const;

  Elem suzuki_sigma(Elem x) const;

  FieldElem elem(Elem index) const { return {id(), index}; }
  std::string to_string(Elem a) const;

  Field(std::uint32_t p, std::uint32_t h, std::vector<std::uint32_t> modulus);

 private:
  Elem poly_mul(Elem a, Elem b) const;
  Elem mul_by_x(Elem a) const;

  std::uint32_t p_, h_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pw_;  // p^i
  Elem prim_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

FieldPtr make_field(std::uint32_t p, std::uint32_t h);
// Looks up a field previously built by make_field.
FieldPtr field_by_id(std::uint32_t id);

FieldElem field_op(FieldOp op, FieldElem a, FieldElem b);
FieldElem field_op(FieldOp op, FieldElem a, std::int64_t exponent);
FieldElem frobenius_power(FieldElem x, std::uint32_t s);
FieldElem trace_norm(TraceNorm kind, FieldElem x, std::uint32_t sub_degree);
FieldElem suzuki_sigma(FieldElem x);

// Largest divisor of a^e - 1 coprime to every a^i - 1 with 1 <= i < e.
std::uint64_t primitive_part(std::uint64_t a, std::uint64_t e);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
// Trial division by every monic polynomial of degree <= h/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);
// Parsed bundled fixture rows: {p, h, c0, ..., ch}.
const std::vector<std::vector<std::uint32_t>>& modulus_table();
std::vector<std::vector<std::uint32_t>> parse_modulus_table(const std::string& text);

}  // namespace ftd
