#include "ftd/linalg.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace ftd {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

void check_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b || a->id() != b->id()) throw LinalgError("operands over different fields");
}

}  // namespace

PointSpace::PointSpace(std::uint32_t p, std::uint32_t dim) : p_(p), dim_(dim) {
  pw_.push_back(1);
  for (std::uint32_t j = 0; j < dim; ++j) {
    pw_.push_back(pw_.back() * p);
    if (pw_.back() > (std::uint64_t{1} << 31)) throw LinalgError("point space too large");
  }
  size_ = pw_[dim];
}

Point PointSpace::add(Point a, Point b) const {
  if (p_ == 2) return a ^ b;
  Point r = 0;
  for (std::uint32_t j = 0; j < dim_; ++j) {
    r += static_cast<Point>(((a % p_) + (b % p_)) % p_ * pw_[j]);
    a /= p_;
    b /= p_;
  }
  return r;
}

Point PointSpace::neg(Point a) const {
  if (p_ == 2) return a;
  Point r = 0;
  for (std::uint32_t j = 0; j < dim_; ++j) {
    r += static_cast<Point>((p_ - a % p_) % p_ * pw_[j]);
    a /= p_;
  }
  return r;
}

Point PointSpace::scale(Point a, std::uint32_t c) const {
  c %= p_;
  if (c == 0) return 0;
  if (c == 1) return a;
  Point r = 0;
  for (std::uint32_t j = 0; j < dim_; ++j) {
    r += static_cast<Point>(static_cast<std::uint64_t>(a % p_) * c % p_ * pw_[j]);
    a /= p_;
  }
  return r;
}

int PointSpace::pivot(Point x) const {
  if (x == 0) return -1;
  if (p_ == 2) return 31 - __builtin_clz(x);
  for (int j = static_cast<int>(dim_) - 1; j >= 0; --j) {
    if (digit(x, j) != 0) return j;
  }
  return -1;
}

Vector Vector::from_point(FieldPtr field, std::size_t n, Point x) {
  Vector v(field, n);
  const std::uint32_t q = field->order();
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = x % q;
    x /= q;
  }
  return v;
}

Point Vector::to_point() const {
  const std::uint64_t q = field_->order();
  std::uint64_t x = 0, w = 1;
  for (Elem c : c_) {
    x += c * w;
    w *= q;
  }
  return static_cast<Point>(x);
}

Vector Vector::operator+(const Vector& o) const {
  check_same_field(field_, o.field_);
  Vector r(field_, c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->add(c_[i], o.c_[i]);
  return r;
}

Vector Vector::operator-(const Vector& o) const {
  check_same_field(field_, o.field_);
  Vector r(field_, c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->sub(c_[i], o.c_[i]);
  return r;
}

Vector Vector::scaled(Elem c) const {
  Vector r(field_, c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->mul(c_[i], c);
  return r;
}

bool Vector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Elem c) { return c == 0; });
}

Matrix::Matrix(FieldPtr field, std::size_t n, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(n), cols_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) throw LinalgError("matrix entry count mismatch");
  for (Elem e : a_) {
    if (e >= field_->order()) throw LinalgError("matrix entry outside the field");
  }
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(field_, std::vector<Elem>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_));
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same_field(field_, o.field_);
  if (cols_ != o.rows_) throw LinalgError("matrix dimension mismatch");
  const Field& f = *field_;
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Elem a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) = f.add(r.at(i, j), f.mul(a, o.at(k, j)));
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_field(field_, o.field_);
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_field(field_, o.field_);
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

Matrix Matrix::conjugate(std::uint32_t s) const {
  Matrix r = *this;
  for (auto& e : r.a_) e = field_->frobenius(e, s);
  return r;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw LinalgError("inverse of a non-square matrix");
  const Field& f = *field_;
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix r = identity(field_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c) == 0) ++piv;
    if (piv == n) throw LinalgError("matrix is singular");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(c, j), a.at(piv, j));
        std::swap(r.at(c, j), r.at(piv, j));
      }
    }
    const Elem s = f.inv(a.at(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) = f.mul(a.at(c, j), s);
      r.at(c, j) = f.mul(r.at(c, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      const Elem m = a.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) = f.sub(a.at(i, j), f.mul(m, a.at(c, j)));
        r.at(i, j) = f.sub(r.at(i, j), f.mul(m, r.at(c, j)));
      }
    }
  }
  return r;
}

Matrix Matrix::power(std::int64_t e) const {
  Matrix base = e < 0 ? inverse() : *this;
  std::uint64_t u = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Matrix r = identity(field_, rows_);
  while (u) {
    if (u & 1) r = r * base;
    base = base * base;
    u >>= 1;
  }
  return r;
}

Elem Matrix::determinant() const {
  if (rows_ != cols_) throw LinalgError("determinant of a non-square matrix");
  const Field& f = *field_;
  const std::size_t n = rows_;
  Matrix a = *this;
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(piv, j));
      det = f.neg(det);
    }
    det = f.mul(det, a.at(c, c));
    const Elem s = f.inv(a.at(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      const Elem m = f.mul(a.at(i, c), s);
      for (std::size_t j = c; j < n; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(m, a.at(c, j)));
    }
  }
  return det;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

Vector operator*(const Vector& v, const Matrix& a) {
  check_same_field(v.field(), a.field());
  if (v.size() != a.rows()) throw LinalgError("vector/matrix dimension mismatch");
  const Field& f = *a.field();
  Vector r(a.field(), a.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] = f.add(r[j], f.mul(v[i], a.at(i, j)));
  }
  return r;
}

Matrix blow_down(const Matrix& a) {
  const FieldPtr& f = a.field();
  const std::uint32_t h = f->h(), p = f->p();
  const std::size_t n = a.rows();
  auto prime = make_field(p, 1);
  const std::size_t big = n * h;
  PointSpace space(p, static_cast<std::uint32_t>(big));
  Matrix out(prime, big, big);
  std::uint32_t pj = 1;
  for (std::uint32_t j = 0; j < h; ++j, pj *= p) {
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(f, n);
      e[i] = pj;
      Point img = (e * a).to_point();
      for (std::size_t c = 0; c < big; ++c) out.at(i * h + j, c) = space.digit(img, static_cast<std::uint32_t>(c));
    }
  }
  return out;
}

Matrix parse_matrix(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ';', ' ');
  std::istringstream in(cleaned);
  std::uint64_t n = 0, q = 0;
  if (!(in >> n >> q) || n == 0 || q < 2) throw LinalgError("bad matrix fixture header");
  std::uint32_t p = 0, h = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint64_t x = q;
  while (x % p == 0) {
    x /= p;
    ++h;
  }
  if (x != 1) throw LinalgError("fixture field size is not a prime power");
  std::vector<Elem> entries;
  for (std::uint64_t i = 0; i < n * n; ++i) {
    std::uint64_t e;
    if (!(in >> e)) throw LinalgError("too few matrix entries");
    entries.push_back(static_cast<Elem>(e));
  }
  std::uint64_t extra;
  if (in >> extra) throw LinalgError("too many matrix entries");
  return Matrix(make_field(p, h), n, std::move(entries));
}

std::string format_matrix(const Matrix& a) {
  std::ostringstream out;
  out << a.rows() << ' ' << a.field()->order() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a.at(i, j);
    out << '\n';
  }
  return out.str();
}

bool Echelon::insert(Point x) {
  const std::uint32_t p = space_.p();
  for (int pos = space_.pivot(x); pos >= 0; pos = space_.pivot(x)) {
    if (!has_[pos]) {
      std::uint32_t d = space_.digit(x, pos);
      rows_[pos] = space_.scale(x, inv_mod(d, p));
      has_[pos] = 1;
      ++rank_;
      return true;
    }
    x = space_.sub(x, space_.scale(rows_[pos], space_.digit(x, pos)));
  }
  return false;
}

Point Echelon::reduce(Point x) const {
  for (int pos = static_cast<int>(space_.dim()) - 1; pos >= 0 && x != 0; --pos) {
    if (!has_[pos]) continue;
    std::uint32_t d = space_.digit(x, pos);
    if (d != 0) x = space_.sub(x, space_.scale(rows_[pos], d));
  }
  return x;
}

std::vector<Point> Echelon::canonical_basis() const {
  std::vector<Point> rows = rows_;
  const int dim = static_cast<int>(space_.dim());
  for (int pos = 0; pos < dim; ++pos) {
    if (!has_[pos]) continue;
    for (int other = pos + 1; other < dim; ++other) {
      if (!has_[other]) continue;
      std::uint32_t d = space_.digit(rows[other], pos);
      if (d != 0) rows[other] = space_.sub(rows[other], space_.scale(rows[pos], d));
    }
  }
  std::vector<Point> out;
  for (int pos = dim - 1; pos >= 0; --pos) {
    if (has_[pos]) out.push_back(rows[pos]);
  }
  return out;
}

Subspace Subspace::span_points(const PointSpace& space, std::span<const Point> points) {
  Echelon e(space);
  for (Point x : points) e.insert(x);
  return Subspace(space, 1, e.canonical_basis());
}

std::uint64_t Subspace::size() const {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) s *= space_.p();
  return s;
}

bool Subspace::contains(Point x) const {
  for (Point b : basis_) {
    int pos = space_.pivot(b);
    std::uint32_t d = space_.digit(x, pos);
    if (d != 0) x = space_.sub(x, space_.scale(b, d));
  }
  return x == 0;
}

std::vector<Point> Subspace::elements() const {
  std::vector<Point> out{0};
  for (Point b : basis_) {
    const std::size_t cur = out.size();
    for (std::uint32_t c = 1; c < space_.p(); ++c) {
      Point bc = space_.scale(b, c);
      for (std::size_t i = 0; i < cur; ++i) out.push_back(space_.add(out[i], bc));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Subspace::key() const {
  std::string k(reinterpret_cast<const char*>(basis_.data()), basis_.size() * sizeof(Point));
  return k;
}

std::size_t SubspaceHash::operator()(const Subspace& s) const {
  std::size_t h = 1469598103934665603ull;
  for (Point b : s.basis()) h = (h ^ b) * 1099511628211ull;
  return h;
}

Subspace canonical_subspace(const FieldPtr& field, std::size_t n, std::span<const Point> points,
                            std::uint32_t sub_degree) {
  PointSpace space(field->p(), static_cast<std::uint32_t>(n * field->h()));
  const auto scalars = field->subfield_basis(sub_degree);
  Echelon e(space);
  for (Point x : points) {
    Vector v = Vector::from_point(field, n, x);
    for (Elem c : scalars) e.insert(v.scaled(c).to_point());
  }
  return Subspace(space, sub_degree, e.canonical_basis());
}

Subspace canonical_subspace(std::span<const Vector> vectors, std::uint32_t sub_degree) {
  if (vectors.empty()) return Subspace();
  std::vector<Point> pts;
  for (const auto& v : vectors) {
    check_same_field(v.field(), vectors[0].field());
    pts.push_back(v.to_point());
  }
  return canonical_subspace(vectors[0].field(), vectors[0].size(), pts, sub_degree);
}

namespace {

std::uint32_t conj_power(const BilinearForm& f) {
  if (f.kind != FormKind::kHermitian) return 0;
  const std::uint32_t h = f.gram.field()->h();
  if (h % 2 != 0) throw LinalgError("hermitian form needs a field of even degree");
  return h / 2;
}

}  // namespace

Elem evaluate_form(const BilinearForm& f, const Vector& u, const Vector& v) {
  const std::size_t n = f.gram.rows();
  if (u.size() != n || v.size() != n) throw LinalgError("form dimension mismatch");
  const Field& k = *f.gram.field();
  const std::uint32_t s = conj_power(f);
  Elem r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      Elem g = f.gram.at(i, j);
      if (g == 0 || v[j] == 0) continue;
      r = k.add(r, k.mul(k.mul(u[i], g), k.frobenius(v[j], s)));
    }
  }
  return r;
}

bool form_is_valid(const BilinearForm& f) {
  const Matrix& g = f.gram;
  const Field& k = *g.field();
  switch (f.kind) {
    case FormKind::kSymplectic:
      for (std::size_t i = 0; i < g.rows(); ++i) {
        if (g.at(i, i) != 0) return false;
        for (std::size_t j = 0; j < g.cols(); ++j) {
          if (g.at(i, j) != k.neg(g.at(j, i))) return false;
        }
      }
      return true;
    case FormKind::kHermitian:
      return g.transpose().conjugate(conj_power(f)) == g;
    case FormKind::kBilinear:
      return true;
  }
  return false;
}

bool preserves_form(const Matrix& a, const BilinearForm& f) {
  const std::uint32_t s = conj_power(f);
  return a * f.gram * a.transpose().conjugate(s) == f.gram;
}

std::vector<std::vector<std::uint32_t>> nullspace_mod_p(std::vector<std::vector<std::uint32_t>> rows,
                                                        std::size_t ncols, std::uint32_t p) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::uint64_t s = inv_mod(rows[r][c] % p, p);
    for (auto& x : rows[r]) x = static_cast<std::uint32_t>(x % p * s % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const std::uint64_t m = rows[i][c] % p;
      if (m == 0) continue;
      for (std::size_t j = 0; j < ncols; ++j) {
        rows[i][j] = static_cast<std::uint32_t>((rows[i][j] % p + (p - m) * rows[r][j]) % p);
      }
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<char> is_pivot(ncols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(ncols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      v[pivot_col[i]] = (p - rows[i][free] % p) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::size_t ncols, std::uint32_t p) {
  return ncols - nullspace_mod_p(std::move(rows), ncols, p).size();
}

}  // namespace

std::vector<BilinearForm> invariant_bilinear_forms(std::span<const Matrix> gens, FormKind kind) {
  if (gens.empty()) return {};
  const FieldPtr& field = gens[0].field();
  const Field& f = *field;
  const std::uint32_t p = f.p(), h = f.h();
  const std::size_t n = gens[0].rows();
  BilinearForm probe{kind, Matrix(field, n, n)};
  const std::uint32_t s = conj_power(probe);
  PointSpace digits(p, h);
  const std::size_t nunk = n * n * h;
  auto unknown = [&](std::size_t a, std::size_t b, std::uint32_t j) { return (a * n + b) * h + j; };

  // Equations are collected column by column: column u holds the image digits
  // of the basis form with a single GF(p)-coordinate set.
  std::vector<std::vector<std::uint32_t>> columns(nunk);
  std::uint32_t pj = 1;
  for (std::uint32_t j = 0; j < h; ++j, pj *= p) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Matrix g(field, n, n);
        g.at(a, b) = pj;
        auto& col = columns[unknown(a, b, j)];
        for (const Matrix& A : gens) {
          Matrix img = A * g * A.transpose().conjugate(s) - g;
          for (Elem e : img.entries()) {
            for (std::uint32_t d = 0; d < h; ++d) col.push_back(digits.digit(e, d));
          }
        }
        // Kind constraints.
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = x; y < n; ++y) {
            Elem val = 0;
            if (kind == FormKind::kSymplectic) {
              val = x == y ? g.at(x, x) : f.add(g.at(x, y), g.at(y, x));
            } else if (kind == FormKind::kHermitian) {
              val = f.sub(g.at(y, x), f.frobenius(g.at(x, y), s));
            } else {
              continue;
            }
            for (std::uint32_t d = 0; d < h; ++d) col.push_back(digits.digit(val, d));
          }
        }
      }
    }
  }
  const std::size_t neq = columns[0].size();
  std::vector<std::vector<std::uint32_t>> rows(neq, std::vector<std::uint32_t>(nunk));
  for (std::size_t u = 0; u < nunk; ++u) {
    for (std::size_t e = 0; e < neq; ++e) rows[e][u] = columns[u][e];
  }
  auto sols = nullspace_mod_p(std::move(rows), nunk, p);

  auto to_gram = [&](const std::vector<std::uint32_t>& v) {
    Matrix g(field, n, n);
    std::uint32_t w = 1;
    for (std::uint32_t j = 0; j < h; ++j, w *= p) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          g.at(a, b) = f.add(g.at(a, b), f.mul(f.scalar(v[unknown(a, b, j)]), w));
        }
      }
    }
    return g;
  };
  auto to_coords = [&](const Matrix& g) {
    std::vector<std::uint32_t> v(nunk);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::uint32_t j = 0; j < h; ++j) v[unknown(a, b, j)] = digits.digit(g.at(a, b), j);
      }
    }
    return v;
  };

  // Reduce the GF(p)-basis to a basis over the scalar field of the form.
  const auto scalars = f.subfield_basis(kind == FormKind::kHermitian ? h / 2 : h);
  std::vector<std::vector<std::uint32_t>> spanned;
  std::vector<BilinearForm> out;
  for (const auto& sol : sols) {
    Matrix g = to_gram(sol);
    auto trial = spanned;
    trial.push_back(to_coords(g));
    if (rank_mod_p(trial, nunk, p) == spanned.size()) continue;
    for (Elem c : scalars) {
      Matrix gc(field, n, n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) gc.at(a, b) = f.mul(g.at(a, b), c);
      }
      spanned.push_back(to_coords(gc));
    }
    out.push_back({kind, g});
  }
  return out;
}

std::vector<Subspace> enumerate_isotropic(const BilinearForm& form, std::size_t d) {
  const FieldPtr& field = form.gram.field();
  const std::size_t n = form.gram.rows();
  PointSpace space(field->p(), static_cast<std::uint32_t>(n * field->h()));
  if (space.size() > (1u << 12)) throw LinalgError("isotropic enumeration limited to 2^12 vectors");
  const auto scalars = field->subfield_basis(field->h());
  std::vector<Vector> vecs;
  for (Point x = 0; x < space.size(); ++x) vecs.push_back(Vector::from_point(field, n, x));

  std::set<Subspace> found;
  std::vector<Point> chosen;
  auto rec = [&](auto&& self, Point start, const Echelon& span) -> void {
    if (chosen.size() == d) {
      found.insert(Subspace(space, field->h(), span.canonical_basis()));
      return;
    }
    for (Point x = start; x < space.size(); ++x) {
      if (x == 0 || span.contains(x)) continue;
      const Vector& v = vecs[x];
      if (evaluate_form(form, v, v) != 0) continue;
      bool ok = true;
      for (Point y : chosen) {
        if (evaluate_form(form, v, vecs[y]) != 0 || evaluate_form(form, vecs[y], v) != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      Echelon next = span;
      for (Elem c : scalars) next.insert(v.scaled(c).to_point());
      chosen.push_back(x);
      self(self, x + 1, next);
      chosen.pop_back();
    }
  };
  rec(rec, 1, Echelon(space));
  return {found.begin(), found.end()};
}

}  // namespace ftd
