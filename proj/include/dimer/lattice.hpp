#pragma once

#include <complex>

#include "dimer/mat6.hpp"
#include "dimer/params.hpp"

namespace dimer {

// Coefficients of the characteristic polynomial
//   P(z,w) = c0 + c1 (z + 1/z + w + 1/w) + c2 (z/w + w/z),
// with c0 = a^2 + 2b^2 + a^2 b^4, c1 = a b (1 - b^2), c2 = b^2 (1 - a^2).
struct CharPolyCoeffs {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
};

CharPolyCoeffs char_poly_coeffs(const ModelParams& p);

// Kasteleyn matrix K(z,w) of the fundamental domain, vertices v1..v6.
// Intra-domain: oriented triangle edges +-1, the a-edge (v3,v4) weight a;
// inter-domain b-edges carry b/z, b/w and their antisymmetric partners.
ComplexMatrix6 build_kasteleyn(const ModelParams& p, cplx z, cplx w);

// Closed-form P(z,w); equals det(build_kasteleyn) to 1e-12 relative.
cplx char_poly(const ModelParams& p, cplx z, cplx w);

// Regime of the quartic A^2(v) = [c2 (1+v^2) + c0 v]^2 - 4 c1^2 v (1+v)^2,
// whose roots {r, s, 1/r, 1/s} control every contour computation.
enum class Regime { BelowCritical, Critical, Intermediate, Independent, AboveIndependent };

struct RootProfile {
    cplx r;
    cplx s;
    Regime tag = Regime::BelowCritical;
};

// Roots labeled so that r crosses 1 at u_c and the pair (r, s) varies
// continuously: below u_c both real with 1 < r < s; between u_c and u_i
// real with r < 1 < s; above u_i complex with |r| < 1 and s = 1/conj(r).
RootProfile spectral_roots(const ModelParams& p);

const char* regime_name(Regime t);

// Value of the quartic A^2 at v (used as the root-membership oracle).
cplx a_squared(const ModelParams& p, cplx v);

}  // namespace dimer
