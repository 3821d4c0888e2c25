#include "ftd/atlas.h"

#include <algorithm>

namespace ftd {

namespace {

constexpr const char* kAlpha = "4 3\n0 0 0 2\n2 0 1 1\n2 2 0 2\n1 0 0 0\n";
constexpr const char* kBeta = "4 3\n1 1 0 0\n0 1 0 0\n0 0 1 1\n0 0 0 1\n";
constexpr const char* kGamma = "4 3\n2 0 2 2\n0 1 0 1\n2 2 1 2\n0 1 0 2\n";
constexpr const char* kDelta = "4 3\n0 0 1 1\n0 0 0 1\n2 1 0 0\n0 2 0 0\n";
constexpr const char* kPsi = "4 3\n1 1 0 0\n0 2 0 0\n0 0 1 0\n0 0 0 2\n";

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw GroupError("field size must be at least 2");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t h = 0;
  while (q % p == 0) {
    q /= p;
    ++h;
  }
  if (q != 1) throw GroupError("field size is not a prime power");
  return {p, h};
}

FieldPtr field_of(std::uint64_t q) {
  auto [p, h] = prime_power(q);
  return make_field(p, h);
}

Matrix mat(const FieldPtr& f, std::size_t n, std::vector<Elem> e) { return Matrix(f, n, std::move(e)); }

GenGroup linear_group(std::string name, const FieldPtr& f, std::size_t n, const std::vector<Matrix>& ms,
                      std::optional<std::uint64_t> order) {
  GenGroup g{std::move(name), f, n, {}, order, false, std::nullopt};
  for (const auto& m : ms) g.gens.push_back(AffineMap::from_linear(m));
  return g;
}

std::vector<Matrix> sl2_gens(const FieldPtr& f) {
  const Field& k = *f;
  const Elem w = k.primitive();
  return {mat(f, 2, {1, 1, 0, 1}), mat(f, 2, {w, 0, 0, k.inv(w)}), mat(f, 2, {0, 1, k.neg(1), 0})};
}

// Unitary det-1 matrices for the identity Gram over GF(s^2), in a fixed order:
// SU2 blocks, a 3-cycle, a central-type diagonal, then orthonormal frames.
std::vector<Matrix> su3_candidates(const FieldPtr& f, std::uint32_t s, std::size_t frames) {
  const Field& k = *f;
  std::vector<Matrix> out;
  for (Elem a = 0; a < k.order(); ++a) {
    for (Elem b = 0; b < k.order(); ++b) {
      if (k.add(k.pow(a, s + 1), k.pow(b, s + 1)) != 1) continue;
      out.push_back(mat(f, 3, {a, b, 0, k.neg(k.pow(b, s)), k.pow(a, s), 0, 0, 0, 1}));
    }
  }
  out.push_back(mat(f, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0}));
  const Elem mu = k.exp(s - 1);
  out.push_back(mat(f, 3, {mu, 0, 0, 0, mu, 0, 0, 0, k.pow(mu, -2)}));
  const BilinearForm herm{FormKind::kHermitian, Matrix::identity(f, 3)};
  const std::uint64_t n3 = static_cast<std::uint64_t>(k.order()) * k.order() * k.order();
  std::size_t made = 0;
  for (Point x = 1; x < n3 && made < frames; ++x) {
    Vector v1 = Vector::from_point(f, 3, x);
    if (evaluate_form(herm, v1, v1) != 1) continue;
    bool all_nonzero = v1[0] && v1[1] && v1[2];
    if (!all_nonzero) continue;
    for (Point y = 1; y < n3 && made < frames; ++y) {
      Vector v2 = Vector::from_point(f, 3, y);
      if (evaluate_form(herm, v2, v2) != 1 || evaluate_form(herm, v1, v2) != 0) continue;
      // v3 spans the orthogonal complement: the conjugated cross product.
      Vector v3(f, 3);
      for (int i = 0; i < 3; ++i) {
        int a = (i + 1) % 3, b = (i + 2) % 3;
        v3[i] = k.frobenius(k.sub(k.mul(v1[a], v2[b]), k.mul(v1[b], v2[a])), k.h() / 2);
      }
      Elem n = evaluate_form(herm, v3, v3);
      if (n == 0) continue;
      Matrix m(f, 3, 3);
      for (int j = 0; j < 3; ++j) {
        m.at(0, j) = v1[j];
        m.at(1, j) = v2[j];
        m.at(2, j) = v3[j];
      }
      // Rescale the last row to unit length and determinant 1.
      Elem d = m.determinant();
      Elem lambda = k.inv(d);
      for (int j = 0; j < 3; ++j) m.at(2, j) = k.mul(m.at(2, j), lambda);
      if (evaluate_form(herm, m.row(2), m.row(2)) != 1) continue;
      out.push_back(m);
      ++made;
      break;
    }
  }
  return out;
}

std::vector<Matrix> su3_gens(const FieldPtr& f, std::uint32_t s) {
  const std::uint64_t order = su3_order(s);
  auto cands = su3_candidates(f, s, 8);
  if (order > (std::uint64_t{1} << 22)) return cands;
  const PointSpace space(f->p(), 3 * f->h());
  std::vector<Matrix> gens;
  std::vector<PrimeAffine> kept;
  ElementSet closure = enumerate_elements(space, kept);
  for (const auto& m : cands) {
    if (closure.size() == order) break;
    PrimeAffine pm = PrimeAffine::from(AffineMap::from_linear(m));
    if (closure.contains(pm)) continue;
    kept.push_back(pm);
    gens.push_back(m);
    closure = enumerate_elements(space, kept);
  }
  if (closure.size() != order) throw GroupError("SU3 generators do not reach the expected order");
  return gens;
}

// GF(p)-matrix of x -> (w^e x)^(p^s) on GF(p^d) viewed as V_d(p).
Matrix semilinear_matrix(const FieldPtr& big, std::uint64_t e, std::uint64_t s) {
  const Field& k = *big;
  auto prime = make_field(k.p(), 1);
  const std::uint32_t d = k.h();
  PointSpace digits(k.p(), d);
  Matrix m(prime, d, d);
  for (std::uint32_t j = 0; j < d; ++j) {
    Elem img = k.frobenius(k.mul(k.exp(e), digits.unit(j)), static_cast<std::uint32_t>(s));
    for (std::uint32_t c = 0; c < d; ++c) m.at(j, c) = digits.digit(img, c);
  }
  return m;
}

// Coordinatewise Frobenius x -> x^p on V_n(q), as a GF(p)-matrix.
Matrix frobenius_matrix(const FieldPtr& f, std::size_t n) {
  const Field& k = *f;
  auto prime = make_field(k.p(), 1);
  const std::uint32_t big = static_cast<std::uint32_t>(n * k.h());
  PointSpace space(k.p(), big);
  Matrix m(prime, big, big);
  for (std::uint32_t j = 0; j < big; ++j) {
    Vector v = Vector::from_point(f, n, space.unit(j));
    for (std::size_t i = 0; i < n; ++i) v[i] = k.frobenius(v[i], 1);
    Point img = v.to_point();
    for (std::uint32_t c = 0; c < big; ++c) m.at(j, c) = space.digit(img, c);
  }
  return m;
}

GenGroup su3_2_family(std::string name, bool diag, bool frob, std::uint64_t order) {
  auto f4 = make_field(2, 2);
  auto f2 = make_field(2, 1);
  std::vector<Matrix> ms;
  for (const auto& m : su3_gens(f4, 2)) ms.push_back(blow_down(m));
  if (diag) ms.push_back(blow_down(mat(f4, 3, {f4->primitive(), 0, 0, 0, 1, 0, 0, 0, 1})));
  if (frob) ms.push_back(frobenius_matrix(f4, 3));
  return linear_group(std::move(name), f2, 6, ms, order);
}

}  // namespace

std::uint64_t sl2_order(std::uint64_t q) { return q * (q * q - 1); }
std::uint64_t sp4_order(std::uint64_t q) { return q * q * q * q * (q * q - 1) * (q * q * q * q - 1); }
std::uint64_t su3_order(std::uint64_t s) { return s * s * s * (s * s - 1) * (s * s * s + 1); }
std::uint64_t sz_order(std::uint64_t q) { return q * q * (q * q + 1) * (q - 1); }

Matrix sz_phi(const FieldPtr& f, Elem l, Elem w) {
  const Field& k = *f;
  auto sg = [&](Elem x) { return k.suzuki_sigma(x); };
  const Elem l1s = k.mul(l, sg(l));
  const Elem l2s = k.mul(l, l1s);
  return mat(f, 4,
             {1, 0, 0, 0,                                         //
              l, 1, 0, 0,                                         //
              k.add(l1s, w), sg(l), 1, 0,                         //
              k.add(k.add(l2s, k.mul(l, w)), sg(w)), w, l, 1});
}

Matrix sz_psi(const FieldPtr& f, Elem m) {
  const Field& k = *f;
  const Elem ms = k.suzuki_sigma(m);
  const Elem a = k.mul(k.mul(m, m), ms);
  return mat(f, 4, {a, 0, 0, 0, 0, ms, 0, 0, 0, 0, k.inv(ms), 0, 0, 0, 0, k.inv(a)});
}

Matrix sz_flip(const FieldPtr& f) { return mat(f, 4, {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0}); }

const char* ex3_fixture(Ex3Matrix which) {
  switch (which) {
    case Ex3Matrix::kAlpha: return kAlpha;
    case Ex3Matrix::kBeta: return kBeta;
    case Ex3Matrix::kGamma: return kGamma;
    case Ex3Matrix::kDelta: return kDelta;
    case Ex3Matrix::kPsi: return kPsi;
  }
  return kAlpha;
}

Matrix ex3_matrix(Ex3Matrix which) { return parse_matrix(ex3_fixture(which)); }

BilinearForm ex3_form() { return sp4_form(make_field(3, 1)); }

BilinearForm sp4_form(const FieldPtr& f) {
  const Elem m1 = f->neg(1);
  return {FormKind::kSymplectic, mat(f, 4, {0, m1, 0, 0, 1, 0, 0, 0, 0, 0, 0, m1, 0, 0, 1, 0})};
}

GenGroup atlas(std::string_view name, const AtlasParams& params) {
  if (name == "SL2") {
    auto f = field_of(params.q);
    auto g = linear_group("SL2(" + std::to_string(params.q) + ")", f, 2, sl2_gens(f), sl2_order(params.q));
    g.form = BilinearForm{FormKind::kSymplectic, mat(f, 2, {0, 1, f->neg(1), 0})};
    return g;
  }
  if (name == "Sp4") {
    auto f = field_of(params.q);
    const Field& k = *f;
    std::vector<Matrix> ms;
    for (const auto& a : sl2_gens(f)) {
      ms.push_back(mat(f, 4, {a.at(0, 0), a.at(0, 1), 0, 0, a.at(1, 0), a.at(1, 1), 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}));
    }
    ms.push_back(mat(f, 4, {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0}));
    // Symplectic transvection x -> x + F(x,v) v with v = e1 + e3.
    const BilinearForm form = sp4_form(f);
    Vector v(f, std::vector<Elem>{1, 0, 1, 0});
    Matrix t = Matrix::identity(f, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      Vector ei(f, 4);
      ei[i] = 1;
      Elem c = evaluate_form(form, ei, v);
      for (std::size_t j = 0; j < 4; ++j) t.at(i, j) = k.add(t.at(i, j), k.mul(c, v[j]));
    }
    ms.push_back(t);
    auto g = linear_group("Sp4(" + std::to_string(params.q) + ")", f, 4, ms, sp4_order(params.q));
    g.form = form;
    return g;
  }
  if (name == "SU3") {
    const std::uint32_t s = params.s;
    if (s < 2 || static_cast<std::uint64_t>(s) * s > 1024) throw GroupError("SU3 needs s^2 <= 2^10");
    auto [p, h] = prime_power(s);
    auto f = make_field(p, 2 * h);
    auto g = linear_group("SU3(" + std::to_string(s) + ")", f, 3, su3_gens(f, s), su3_order(s));
    g.form = BilinearForm{FormKind::kHermitian, Matrix::identity(f, 3)};
    return g;
  }
  if (name == "Sz") {
    auto f = field_of(params.q);
    if (f->p() != 2 || f->h() % 2 == 0 || f->h() < 3) throw GroupError("Sz needs q = 2^(2e+1), e >= 1");
    std::vector<Matrix> ms;
    for (std::uint32_t j = 0; j < f->h(); ++j) ms.push_back(sz_phi(f, Elem{1} << j, 0));
    for (std::uint32_t j = 0; j < f->h(); ++j) ms.push_back(sz_phi(f, 0, Elem{1} << j));
    ms.push_back(sz_psi(f, f->primitive()));
    ms.push_back(sz_flip(f));
    auto g = linear_group("Sz(" + std::to_string(params.q) + ")", f, 4, ms, sz_order(params.q));
    g.form = BilinearForm{FormKind::kSymplectic, sz_flip(f)};
    return g;
  }
  if (name == "GammaL1-subgroup") {
    auto big = make_field(params.p, params.degree);
    const std::uint64_t q = big->order();
    const std::uint64_t d = params.degree;
    if (params.c == 0 || (q - 1) % params.c != 0) throw GroupError("c must divide p^(2m) - 1");
    if (params.sexp == 0 || d % params.sexp != 0) throw GroupError("s must divide 2m");
    std::uint64_t ps = 1;
    for (std::uint64_t i = 0; i < params.sexp; ++i) ps *= params.p;
    if ((params.e * ((q - 1) / (ps - 1))) % params.c != 0) throw GroupError("e violates the closure condition");
    std::vector<Matrix> ms{semilinear_matrix(big, params.c, 0), semilinear_matrix(big, params.e, params.sexp)};
    auto prime = make_field(params.p, 1);
    return linear_group("GammaL1(" + std::to_string(q) + ";c=" + std::to_string(params.c) +
                            ",e=" + std::to_string(params.e) + ",s=" + std::to_string(params.sexp) + ")",
                        prime, d, ms, (q - 1) / params.c * (d / params.sexp));
  }
  if (name == "Ex3-SL2(5)" || name == "Ex3-SL2(5).2" || name == "Ex3-SL2(5).2.2") {
    std::vector<Matrix> ms{ex3_matrix(Ex3Matrix::kAlpha), ex3_matrix(Ex3Matrix::kBeta)};
    std::uint64_t order = 120;
    if (name != "Ex3-SL2(5)") {
      ms.push_back(ex3_matrix(Ex3Matrix::kDelta));
      order = 240;
    }
    if (name == "Ex3-SL2(5).2.2") {
      ms.push_back(ex3_matrix(Ex3Matrix::kPsi));
      order = 480;
    }
    auto g = linear_group(std::string(name), make_field(3, 1), 4, ms, order);
    if (name == "Ex3-SL2(5)") g.form = ex3_form();
    return g;
  }
  if (name == "SU3(2)-on-V6(2)") return su3_2_family("SU3(2)-on-V6(2)", false, false, 216);
  if (name == "SigmaU3(2)-on-V6(2)") return su3_2_family("SigmaU3(2)-on-V6(2)", false, true, 432);
  if (name == "GammaU3(2)-on-V6(2)") return gammaU3_2_on_V6_2();
  if (name == "trivial") {
    return GenGroup{"1", make_field(params.p, 1), params.degree, {}, 1, false, std::nullopt};
  }
  throw GroupError("unknown atlas entry: " + std::string(name));
}

std::vector<std::string> atlas_names() {
  return {"SL2", "Sp4", "SU3", "Sz", "GammaL1-subgroup", "Ex3-SL2(5)", "Ex3-SL2(5).2", "Ex3-SL2(5).2.2",
          "SU3(2)-on-V6(2)", "SigmaU3(2)-on-V6(2)", "GammaU3(2)-on-V6(2)", "trivial"};
}

GenGroup gammaU3_2_on_V6_2() { return su3_2_family("GammaU3(2)-on-V6(2)", true, true, 1296); }

GenGroup affine_closure(const GenGroup& g0) {
  if (!g0.is_linear()) throw GroupError("affine closure needs a linear group");
  GenGroup g = g0;
  g.name = "T:" + g0.name;
  const PointSpace space = g0.point_space();
  for (std::uint32_t j = 0; j < space.dim(); ++j) {
    g.gens.push_back(AffineMap::translation(Vector::from_point(g0.field, g0.dim, space.unit(j))));
  }
  if (g0.known_order) g.known_order = space.size() * *g0.known_order;
  g.contains_translations = true;
  return g;
}

}  // namespace ftd
