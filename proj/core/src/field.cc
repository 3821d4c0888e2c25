#include "ftd/field.h"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace ftd {

extern const char* const kModulusFixture;

namespace {

std::mutex registry_mutex;
std::map<std::uint32_t, FieldPtr>& registry() {
  static std::map<std::uint32_t, FieldPtr> fields;
  return fields;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto r : factors) {
      if (powmod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw FieldError("no primitive root");
}

// Remainder of a modulo monic b over GF(p); both low-to-high.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    std::uint32_t c = a.back();
    if (c != 0) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t k = 0; k <= db; ++k) {
        a[shift + k] = static_cast<std::uint32_t>(
            (a[shift + k] + static_cast<std::uint64_t>(p - c) * b[k]) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  const std::uint32_t h = static_cast<std::uint32_t>(monic.size()) - 1;
  for (std::uint32_t d = 1; 2 * d <= h; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> div(d + 1);
      std::uint64_t x = idx;
      for (std::uint32_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      div[d] = 1;
      auto rem = poly_rem(monic, div, p);
      bool zero = true;
      for (auto c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> parse_modulus_table(const std::string& text) {
  std::vector<std::vector<std::uint32_t>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::uint32_t> row;
    std::uint32_t v;
    while (ls >> v) row.push_back(v);
    if (row.size() < 4 || row.size() != row[1] + 3) {
      throw FieldError("malformed modulus fixture line: " + line);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<std::vector<std::uint32_t>>& modulus_table() {
  static const auto rows = parse_modulus_table(kModulusFixture);
  return rows;
}

Field::Field(std::uint32_t p, std::uint32_t h, std::vector<std::uint32_t> modulus)
    : p_(p), h_(h), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < h; ++i) {
    pw_.push_back(q_);
    q_ *= p;
  }
  pw_.push_back(q_);
  if (modulus_.size() != h + 1 || modulus_[h] != 1) throw FieldError("modulus not monic of degree h");
  if (!is_irreducible(p, modulus_)) throw FieldError("modulus is reducible");
  prim_ = h == 1 ? (p - modulus_[0]) % p : p;
  if (q_ == 2) prim_ = 1;

  if (q_ <= kTableSizeCap) {
    exp_.assign(2 * static_cast<std::size_t>(q_ - 1) + 1, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      if (k > 0 && x == 1) throw FieldError("modulus is not primitive");
      exp_[k] = x;
      log_[x] = k;
      x = mul_by_x(x);
    }
    if (x != 1) throw FieldError("modulus is not primitive");
    for (std::uint32_t k = q_ - 1; k < exp_.size(); ++k) exp_[k] = exp_[k - (q_ - 1)];
  } else {
    for (auto r : prime_factors(q_ - 1)) {
      if (pow(prim_, (q_ - 1) / r) == 1) throw FieldError("modulus is not primitive");
    }
  }
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t h) { return make_field(p, h); }

FieldPtr make_field(std::uint32_t p, std::uint32_t h) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (h < 1) throw FieldError("degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q > kFieldSizeCap) throw FieldError("field size exceeds 2^20");
  }
  const std::uint32_t id = (p << 5) | h;
  {
    std::lock_guard lock(registry_mutex);
    auto it = registry().find(id);
    if (it != registry().end()) return it->second;
  }
  std::vector<std::uint32_t> modulus;
  if (h == 1) {
    std::uint32_t g = smallest_primitive_root(p);
    modulus = {(p - g) % p, 1};
  } else {
    for (const auto& row : modulus_table()) {
      if (row[0] == p && row[1] == h) modulus.assign(row.begin() + 2, row.end());
    }
    if (modulus.empty()) throw FieldError("no bundled modulus for this field");
  }
  auto field = std::make_shared<const Field>(p, h, std::move(modulus));
  std::lock_guard lock(registry_mutex);
  auto [it, inserted] = registry().emplace(id, field);
  return it->second;
}

FieldPtr field_by_id(std::uint32_t id) {
  std::lock_guard lock(registry_mutex);
  auto it = registry().find(id);
  if (it == registry().end()) throw FieldError("unknown field id");
  return it->second;
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (h_ == 1) return (a + b) % p_;
  Elem r = 0;
  for (std::uint32_t i = 0; i < h_; ++i) {
    std::uint32_t d = (a % p_ + b % p_) % p_;
    r += d * pw_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  if (h_ == 1) return (p_ - a) % p_;
  Elem r = 0;
  for (std::uint32_t i = 0; i < h_; ++i) {
    r += ((p_ - a % p_) % p_) * pw_[i];
    a /= p_;
  }
  return r;
}

Elem Field::mul_by_x(Elem a) const {
  if (h_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * prim_ % p_);
  const std::uint32_t top = a / pw_[h_ - 1];
  Elem shifted = (a % pw_[h_ - 1]) * p_;
  if (top == 0) return shifted;
  Elem sub = 0;
  for (std::uint32_t i = 0; i < h_; ++i) {
    sub += static_cast<Elem>(static_cast<std::uint64_t>(top) * modulus_[i] % p_) * pw_[i];
  }
  return add(shifted, neg(sub));
}

Elem Field::poly_mul(Elem a, Elem b) const {
  if (h_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  if (p_ == 2) {
    std::uint64_t r = 0;
    for (std::uint32_t i = 0; i < h_; ++i) {
      if ((b >> i) & 1) r ^= static_cast<std::uint64_t>(a) << i;
    }
    std::uint64_t mod = 0;
    for (std::uint32_t i = 0; i <= h_; ++i) mod |= static_cast<std::uint64_t>(modulus_[i]) << i;
    for (int d = 2 * static_cast<int>(h_) - 2; d >= static_cast<int>(h_); --d) {
      if ((r >> d) & 1) r ^= mod << (d - h_);
    }
    return static_cast<Elem>(r);
  }
  std::vector<std::uint32_t> da(h_), db(h_);
  for (std::uint32_t i = 0; i < h_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  std::vector<std::uint32_t> prod(2 * h_ - 1, 0);
  for (std::uint32_t i = 0; i < h_; ++i) {
    for (std::uint32_t j = 0; j < h_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  auto rem = poly_rem(prod, modulus_, p_);
  Elem r = 0;
  for (std::size_t i = 0; i < rem.size(); ++i) r += rem[i] * pw_[i];
  return r;
}

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return poly_mul(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw FieldError("inversion of zero");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw FieldError("inversion of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = q_ - 1;
  std::int64_t r = e % n;
  if (r < 0) r += n;
  if (!exp_.empty()) return exp_[static_cast<std::uint64_t>(log_[a]) * r % n];
  Elem result = 1, base = a;
  auto u = static_cast<std::uint64_t>(r);
  while (u) {
    if (u & 1) result = poly_mul(result, base);
    base = poly_mul(base, base);
    u >>= 1;
  }
  return result;
}

Elem Field::scalar(std::int64_t c) const {
  std::int64_t r = c % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::exp(std::uint64_t k) const {
  k %= (q_ - 1);
  if (!exp_.empty()) return exp_[k];
  return pow(prim_, static_cast<std::int64_t>(k));
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw FieldError("logarithm of zero");
  if (!exp_.empty()) return log_[a];
  // Baby-step giant-step.
  const std::uint32_t n = q_ - 1;
  std::uint32_t m = 1;
  while (static_cast<std::uint64_t>(m) * m < n) ++m;
  std::unordered_map<Elem, std::uint32_t> baby;
  Elem x = 1;
  for (std::uint32_t j = 0; j < m; ++j) {
    baby.emplace(x, j);
    x = poly_mul(x, prim_);
  }
  const Elem giant = inv(pow(prim_, m));
  Elem y = a;
  for (std::uint32_t i = 0; i <= m; ++i) {
    auto it = baby.find(y);
    if (it != baby.end()) return (i * m + it->second) % n;
    y = poly_mul(y, giant);
  }
  throw FieldError("logarithm not found");
}

Elem Field::frobenius(Elem x, std::uint32_t s) const {
  if (x == 0 || s % h_ == 0) return x;
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < s % h_; ++i) e *= p_;
  return pow(x, static_cast<std::int64_t>(e));
}

Elem Field::trace(Elem x, std::uint32_t d) const {
  if (d == 0 || h_ % d != 0) throw FieldError("sub-degree must divide h");
  Elem r = 0;
  for (std::uint32_t i = 0; i < h_ / d; ++i) r = add(r, frobenius(x, d * i));
  return r;
}

Elem Field::norm(Elem x, std::uint32_t d) const {
  if (d == 0 || h_ % d != 0) throw FieldError("sub-degree must divide h");
  Elem r = 1;
  for (std::uint32_t i = 0; i < h_ / d; ++i) r = mul(r, frobenius(x, d * i));
  return r;
}

bool Field::in_subfield(Elem x, std::uint32_t d) const {
  if (d == 0 || h_ % d != 0) throw FieldError("sub-degree must divide h");
  return frobenius(x, d) == x;
}

std::vector<Elem> Field::subfield_basis(std::uint32_t d) const {
  if (d == 0 || h_ % d != 0) throw FieldError("sub-degree must divide h");
  const Elem t = exp((q_ - 1) / (pw_[d] - 1));
  std::vector<Elem> basis{1};
  for (std::uint32_t i = 1; i < d; ++i) basis.push_back(mul(basis.back(), t));
  return basis;
}

std::vector<Elem> Field::subfield_elements(std::uint32_t d) const {
  if (d == 0 || h_ % d != 0) throw FieldError("sub-degree must divide h");
  std::vector<Elem> out{0};
  const std::uint32_t step = (q_ - 1) / (pw_[d] - 1);
  for (std::uint32_t k = 0; k < pw_[d] - 1; ++k) out.push_back(exp(static_cast<std::uint64_t>(k) * step));
  return out;
}

Elem Field::suzuki_sigma(Elem x) const {
  if (p_ != 2 || h_ % 2 == 0 || h_ < 3) throw FieldError("field is not of Suzuki shape");
  return frobenius(x, (h_ - 1) / 2 + 1);
}

std::string Field::to_string(Elem a) const { return std::to_string(a); }

namespace {

const Field& common_field(FieldElem a, FieldElem b) {
  if (a.field_id != b.field_id) throw FieldError("operands belong to different fields");
  return *field_by_id(a.field_id);
}

}  // namespace

FieldElem field_op(FieldOp op, FieldElem a, FieldElem b) {
  const Field& f = common_field(a, b);
  switch (op) {
    case FieldOp::kAdd: return f.elem(f.add(a.index, b.index));
    case FieldOp::kSub: return f.elem(f.sub(a.index, b.index));
    case FieldOp::kMul: return f.elem(f.mul(a.index, b.index));
    case FieldOp::kInv: return f.elem(f.inv(a.index));
    case FieldOp::kNeg: return f.elem(f.neg(a.index));
    case FieldOp::kPow: throw FieldError("pow takes an integer exponent");
  }
  throw FieldError("unknown field operation");
}

FieldElem field_op(FieldOp op, FieldElem a, std::int64_t exponent) {
  auto f = field_by_id(a.field_id);
  switch (op) {
    case FieldOp::kPow: return f->elem(f->pow(a.index, exponent));
    case FieldOp::kInv: return f->elem(f->inv(a.index));
    case FieldOp::kNeg: return f->elem(f->neg(a.index));
    default: throw FieldError("binary operation needs a field element operand");
  }
}

FieldElem frobenius_power(FieldElem x, std::uint32_t s) {
  auto f = field_by_id(x.field_id);
  if (s >= f->h()) throw FieldError("frobenius exponent out of range");
  return f->elem(f->frobenius(x.index, s));
}

FieldElem trace_norm(TraceNorm kind, FieldElem x, std::uint32_t sub_degree) {
  auto f = field_by_id(x.field_id);
  return f->elem(kind == TraceNorm::kTrace ? f->trace(x.index, sub_degree)
                                           : f->norm(x.index, sub_degree));
}

FieldElem suzuki_sigma(FieldElem x) {
  auto f = field_by_id(x.field_id);
  return f->elem(f->suzuki_sigma(x.index));
}

std::uint64_t primitive_part(std::uint64_t a, std::uint64_t e) {
  if (a < 2 || e < 1) throw std::invalid_argument("primitive_part needs a >= 2, e >= 1");
  const std::uint64_t limit = std::uint64_t{1} << 62;
  std::uint64_t ae = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (ae > limit / a) throw std::overflow_error("a^e exceeds 2^62");
    ae *= a;
  }
  std::uint64_t n = ae - 1;
  std::uint64_t ai = 1;
  for (std::uint64_t i = 1; i < e; ++i) {
    ai *= a;
    for (std::uint64_t g = std::gcd(n, ai - 1); g > 1; g = std::gcd(n, ai - 1)) n /= g;
  }
  return n;
}

}  // namespace ftd
