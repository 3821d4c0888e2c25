#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ftd/field.h"

namespace ftd {

// A point of V_n(q) seen as GF(p)^N with N = nh: the index is sum d_j p^j over
// the prime-field digits, which equals sum c_i q^i over the GF(q) coordinates.
using Point = std::uint32_t;

class LinalgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PointSpace {
 public:
  PointSpace() = default;
  PointSpace(std::uint32_t p, std::uint32_t dim);

  std::uint32_t p() const { return p_; }
  std::uint32_t dim() const { return dim_; }
  std::uint64_t size() const { return size_; }
  Point unit(std::uint32_t j) const { return pw_[j]; }

  std::uint32_t digit(Point x, std::uint32_t j) const { return (x / pw_[j]) % p_; }
  Point add(Point a, Point b) const;
  Point sub(Point a, Point b) const { return add(a, neg(b)); }
  Point neg(Point a) const;
  Point scale(Point a, std::uint32_t c) const;
  // Position of the highest nonzero digit, or -1 for 0.
  int pivot(Point x) const;

  friend bool operator==(const PointSpace& a, const PointSpace& b) {
    return a.p_ == b.p_ && a.dim_ == b.dim_;
  }

 private:
  std::uint32_t p_ = 2, dim_ = 0;
  std::uint64_t size_ = 1;
  std::vector<std::uint64_t> pw_;
};

class Vector {
 public:
  Vector() = default;
  Vector(FieldPtr field, std::size_t n) : field_(std::move(field)), c_(n, 0) {}
  Vector(FieldPtr field, std::vector<Elem> coords) : field_(std::move(field)), c_(std::move(coords)) {}

  static Vector from_point(FieldPtr field, std::size_t n, Point x);
  Point to_point() const;

  const FieldPtr& field() const { return field_; }
  std::size_t size() const { return c_.size(); }
  Elem operator[](std::size_t i) const { return c_[i]; }
  Elem& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Elem>& coords() const { return c_; }

  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector scaled(Elem c) const;
  bool is_zero() const;
  friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }

 private:
  FieldPtr field_;
  std::vector<Elem> c_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  Matrix(FieldPtr field, std::size_t n, std::vector<Elem> entries);

  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const std::vector<Elem>& entries() const { return a_; }
  Vector row(std::size_t i) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  // Entrywise x -> x^(p^s).
  Matrix conjugate(std::uint32_t s) const;
  Matrix inverse() const;
  Matrix power(std::int64_t e) const;
  Elem determinant() const;
  bool is_identity() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

Vector operator*(const Vector& v, const Matrix& a);

// The GF(p)-matrix of size nh x nh of a GF(q)-matrix, in the basis
// {w^j e_i} ordered by point-index digit position i*h + j.
Matrix blow_down(const Matrix& a);

// Fixture format: "n q" then n*n row-major field indices.
Matrix parse_matrix(const std::string& text);
std::string format_matrix(const Matrix& a);

// Incremental row reduction over GF(p) on point indices.
class Echelon {
 public:
  explicit Echelon(PointSpace space) : space_(std::move(space)), rows_(space_.dim(), 0), has_(space_.dim(), 0) {}
  // Returns true if x was independent of the rows so far.
  bool insert(Point x);
  Point reduce(Point x) const;
  bool contains(Point x) const { return reduce(x) == 0; }
  std::size_t rank() const { return rank_; }
  // Reduced row echelon basis, sorted by pivot descending.
  std::vector<Point> canonical_basis() const;
  const PointSpace& space() const { return space_; }

 private:
  PointSpace space_;
  std::vector<Point> rows_;
  std::vector<char> has_;
  std::size_t rank_ = 0;
};

class Subspace {
 public:
  Subspace() = default;
  Subspace(PointSpace space, std::uint32_t sub_degree, std::vector<Point> canonical_basis)
      : space_(std::move(space)), sub_degree_(sub_degree), basis_(std::move(canonical_basis)) {}

  // GF(p)-span of points.
  static Subspace span_points(const PointSpace& space, std::span<const Point> points);

  const PointSpace& space() const { return space_; }
  std::uint32_t sub_degree() const { return sub_degree_; }
  const std::vector<Point>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }  // over GF(p)
  std::uint64_t size() const;
  bool contains(Point x) const;
  std::vector<Point> elements() const;  // sorted ascending
  std::string key() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.space_ == b.space_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis_ < b.basis_; }

 private:
  PointSpace space_;
  std::uint32_t sub_degree_ = 1;
  std::vector<Point> basis_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const;
};

// GF(p^d)-span of vectors over GF(q), canonicalized at the prime level.
Subspace canonical_subspace(std::span<const Vector> vectors, std::uint32_t sub_degree);
Subspace canonical_subspace(const FieldPtr& field, std::size_t n, std::span<const Point> points,
                            std::uint32_t sub_degree);

enum class FormKind { kSymplectic, kHermitian, kBilinear };

struct BilinearForm {
  FormKind kind = FormKind::kBilinear;
  Matrix gram;
};

Elem evaluate_form(const BilinearForm& f, const Vector& u, const Vector& v);
bool form_is_valid(const BilinearForm& f);
bool preserves_form(const Matrix& a, const BilinearForm& f);
// Basis over GF(q) (GF(q^(1/2)) for hermitian) of the invariant forms of kind.
std::vector<BilinearForm> invariant_bilinear_forms(std::span<const Matrix> gens, FormKind kind);
// All d-dimensional GF(q)-subspaces on which f vanishes identically.
std::vector<Subspace> enumerate_isotropic(const BilinearForm& f, std::size_t d);

// Basis of the right nullspace of a dense matrix over GF(p).
std::vector<std::vector<std::uint32_t>> nullspace_mod_p(std::vector<std::vector<std::uint32_t>> rows,
                                                        std::size_t ncols, std::uint32_t p);

}  // namespace ftd
