#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ftd/atlas.h"
#include "ftd/linalg.h"

namespace {

using ftd::Elem;
using ftd::Matrix;
using ftd::Point;
using ftd::Vector;

Matrix random_matrix(const ftd::FieldPtr& f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
  std::vector<Elem> e(n * n);
  for (auto& x : e) x = pick(rng);
  return Matrix(f, n, e);
}

// Leibniz expansion for 3x3.
Elem det3(const Matrix& a) {
  const auto& f = *a.field();
  auto t = [&](int i, int j, int k) { return f.mul(a.at(0, i), f.mul(a.at(1, j), a.at(2, k))); };
  Elem plus = f.add(f.add(t(0, 1, 2), t(1, 2, 0)), t(2, 0, 1));
  Elem minus = f.add(f.add(t(0, 2, 1), t(1, 0, 2)), t(2, 1, 0));
  return f.sub(plus, minus);
}

TEST(PointSpace, DigitsAndArithmetic) {
  ftd::PointSpace s(3, 4);
  EXPECT_EQ(s.size(), 81u);
  EXPECT_EQ(s.unit(3), 27u);
  for (Point x = 0; x < s.size(); ++x) {
    EXPECT_EQ(s.add(x, s.neg(x)), 0u);
    EXPECT_EQ(s.scale(x, 2), s.add(x, x));
    Point rebuilt = 0;
    for (std::uint32_t j = 0; j < 4; ++j) rebuilt += s.digit(x, j) * s.unit(j);
    EXPECT_EQ(rebuilt, x);
  }
  EXPECT_EQ(s.pivot(0), -1);
  EXPECT_EQ(s.pivot(28), 3);
}

TEST(Vector, PointRoundTripAndAdditionAgree) {
  auto f = ftd::make_field(2, 2);
  ftd::PointSpace s(2, 4);
  for (Point x = 0; x < 16; ++x) {
    const Vector v = Vector::from_point(f, 2, x);
    EXPECT_EQ(v.to_point(), x);
    for (Point y = 0; y < 16; ++y) {
      EXPECT_EQ((v + Vector::from_point(f, 2, y)).to_point(), s.add(x, y));
    }
  }
  // (w, 0) is the prime unit at digit position 1.
  EXPECT_EQ(Vector(f, {2, 0}).to_point(), s.unit(1));
  EXPECT_EQ(Vector(f, {0, 1}).to_point(), s.unit(2));
}

TEST(Matrix, InverseDeterminantProperties) {
  std::mt19937 rng(3);
  for (auto [p, h] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 1}}) {
    auto f = ftd::make_field(p, h);
    for (int i = 0; i < 40; ++i) {
      const Matrix a = random_matrix(f, 3, rng), b = random_matrix(f, 3, rng);
      EXPECT_EQ(a.determinant(), det3(a));
      EXPECT_EQ((a * b).determinant(), f->mul(a.determinant(), b.determinant()));
      if (a.determinant() != 0) {
        EXPECT_TRUE((a * a.inverse()).is_identity());
        EXPECT_TRUE((a.inverse() * a).is_identity());
        EXPECT_EQ(a.power(-2), a.inverse() * a.inverse());
      } else {
        EXPECT_THROW(a.inverse(), ftd::LinalgError);
      }
      EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
    }
  }
}

TEST(Matrix, BlowDownActsLikeTheFieldMatrix) {
  std::mt19937 rng(8);
  auto f = ftd::make_field(3, 2);
  const Matrix a = random_matrix(f, 2, rng);
  const Matrix m = ftd::blow_down(a);
  ASSERT_EQ(m.rows(), 4u);
  auto fp = ftd::make_field(3, 1);
  for (Point x = 0; x < 81; ++x) {
    const Point want = (Vector::from_point(f, 2, x) * a).to_point();
    const Point got = (Vector::from_point(fp, 4, x) * m).to_point();
    EXPECT_EQ(got, want);
  }
}

TEST(Matrix, FixtureFormatRoundTrip) {
  const Matrix a = ftd::ex3_matrix(ftd::Ex3Matrix::kAlpha);
  EXPECT_EQ(ftd::parse_matrix(ftd::format_matrix(a)), a);
  EXPECT_THROW(ftd::parse_matrix("2 3\n1 2 0\n"), ftd::LinalgError);
  EXPECT_THROW(ftd::parse_matrix("2 3\n1 2 0 9\n"), ftd::LinalgError);
}

TEST(Subspace, SpanSizeAndCanonicalForm) {
  ftd::PointSpace s(2, 6);
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    std::vector<Point> gens(3);
    for (auto& g : gens) g = rng() % 64;
    const auto sub = ftd::Subspace::span_points(s, gens);
    ftd::Echelon e(s);
    for (Point g : gens) e.insert(g);
    EXPECT_EQ(sub.size(), 1ull << e.rank());
    // Elements are closed under addition and the canonical basis ignores generator order.
    auto el = sub.elements();
    for (Point x : el) {
      for (Point y : el) EXPECT_TRUE(sub.contains(s.add(x, y)));
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(s.add(gens[0], gens[1]));
    EXPECT_EQ(ftd::Subspace::span_points(s, gens), sub);
  }
}

TEST(Subspace, SpanOverSubfield) {
  auto f = ftd::make_field(2, 2);
  const std::vector<Vector> e1{Vector(f, {1, 0})};
  EXPECT_EQ(ftd::canonical_subspace(e1, 2).size(), 4u);
  EXPECT_EQ(ftd::canonical_subspace(e1, 1).size(), 2u);
  const std::vector<Vector> e12{Vector(f, {1, 0}), Vector(f, {0, 1})};
  EXPECT_EQ(ftd::canonical_subspace(e12, 1).elements(), (std::vector<Point>{0, 1, 4, 5}));
}

TEST(Forms, Ex3FormValues) {
  const auto form = ftd::ex3_form();
  auto f = form.gram.field();
  EXPECT_EQ(ftd::evaluate_form(form, Vector(f, {1, 0, 0, 0}), Vector(f, {0, 1, 0, 0})), 2u);  // -1 in GF(3)
  EXPECT_EQ(ftd::evaluate_form(form, Vector(f, {1, 0, 0, 0}), Vector(f, {0, 0, 0, 1})), 0u);
  EXPECT_TRUE(ftd::form_is_valid(form));
}

// Totally isotropic 2-spaces of a symplectic 4-space: (q^2+1)(q+1).
TEST(Forms, SymplecticIsotropicCounts) {
  EXPECT_EQ(ftd::enumerate_isotropic(ftd::ex3_form(), 2).size(), 40u);
  EXPECT_EQ(ftd::enumerate_isotropic(ftd::sp4_form(ftd::make_field(2, 1)), 2).size(), 15u);
  EXPECT_EQ(ftd::enumerate_isotropic(ftd::sp4_form(ftd::make_field(2, 2)), 2).size(), 85u);
  // Every point of a symplectic space is isotropic.
  EXPECT_EQ(ftd::enumerate_isotropic(ftd::ex3_form(), 1).size(), 40u);
}

// Isotropic points of the unitary form on V3(s^2): s^3 + 1.
TEST(Forms, HermitianIsotropicPoints) {
  for (std::uint32_t s : {2u, 3u}) {
    auto f = ftd::make_field(s, 2);
    ftd::BilinearForm h{ftd::FormKind::kHermitian, Matrix::identity(f, 3)};
    EXPECT_EQ(ftd::enumerate_isotropic(h, 1).size(), s * s * s + 1) << s;
  }
}

TEST(Forms, InvariantFormsOfSp4AreOneDimensional) {
  for (std::uint32_t q : {2u, 3u}) {
    const auto g = ftd::atlas("Sp4", {.q = q});
    const auto gens = g.linear_parts();
    const auto forms = ftd::invariant_bilinear_forms(gens, ftd::FormKind::kSymplectic);
    ASSERT_EQ(forms.size(), 1u);
    for (const auto& m : gens) EXPECT_TRUE(ftd::preserves_form(m, forms[0]));
  }
  // The identity alone preserves every alternating form: n(n-1)/2 of them.
  auto f = ftd::make_field(3, 1);
  const std::vector<Matrix> id{Matrix::identity(f, 4)};
  EXPECT_EQ(ftd::invariant_bilinear_forms(id, ftd::FormKind::kSymplectic).size(), 6u);
}

TEST(Nullspace, SmallSystem) {
  // x + y + z = 0 over GF(2): two-dimensional solution space.
  const auto ns = ftd::nullspace_mod_p({{1, 1, 1}}, 3, 2);
  EXPECT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ((v[0] + v[1] + v[2]) % 2, 0u);
}

}  // namespace
