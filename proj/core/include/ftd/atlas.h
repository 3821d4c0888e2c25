#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ftd/group.h"

namespace ftd {

struct AtlasParams {
  std::uint32_t q = 0;       // SL2, Sp4, Sz
  std::uint32_t s = 0;       // SU3 over GF(s^2)
  std::uint32_t p = 0;       // GammaL1-subgroup, trivial
  std::uint32_t degree = 0;  // GammaL1-subgroup: 2m; trivial: dimension over GF(p)
  std::uint64_t c = 1, e = 0, sexp = 0;
};

// Names: SL2, Sp4, SU3, Sz, GammaL1-subgroup, Ex3-SL2(5), Ex3-SL2(5).2,
// Ex3-SL2(5).2.2, SU3(2)-on-V6(2), SigmaU3(2)-on-V6(2), GammaU3(2)-on-V6(2),
// trivial.
GenGroup atlas(std::string_view name, const AtlasParams& params = {});
std::vector<std::string> atlas_names();

// SU3(2) on V6(2) extended by diag(w,1,1) and the GF(4)-Frobenius: order 1296.
GenGroup gammaU3_2_on_V6_2();
// T:G0 with the prime-field basis translations appended.
GenGroup affine_closure(const GenGroup& g0);

std::uint64_t sl2_order(std::uint64_t q);
std::uint64_t sp4_order(std::uint64_t q);
std::uint64_t su3_order(std::uint64_t s);
std::uint64_t sz_order(std::uint64_t q);

// Lower unitriangular generator of the Sylow 2-subgroup U of Sz(q).
Matrix sz_phi(const FieldPtr& f, Elem l, Elem w);
Matrix sz_psi(const FieldPtr& f, Elem m);
Matrix sz_flip(const FieldPtr& f);

enum class Ex3Matrix { kAlpha, kBeta, kGamma, kDelta, kPsi };
Matrix ex3_matrix(Ex3Matrix which);
const char* ex3_fixture(Ex3Matrix which);
// -X1Y2 + X2Y1 - X3Y4 + X4Y3 over GF(3)
BilinearForm ex3_form();
// Alternating form of the same shape over GF(q), preserved by the Sp4 entry.
BilinearForm sp4_form(const FieldPtr& f);

}  // namespace ftd
