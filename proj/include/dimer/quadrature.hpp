#pragma once

#include <array>
#include <complex>
#include <functional>

#include "dimer/lattice.hpp"
#include "dimer/params.hpp"

namespace dimer {

// Uniform product grid on the torus; N per circle, power of two.
struct TorusGrid {
    int n = 16;
    static TorusGrid make(int n);  // validates power-of-two and n >= 16
};

// (i, j) in 1..6 and translation (m, n): the request
//   inverse_entry = (1/(2*pi*i)^2) oint oint [K^{-1}(z,w)]_{v_j, v_i}
//                   z^{-m} w^{-n} dz/z dw/w,
// i.e. the (m,n) Laurent coefficient of the (v_j, v_i) entry.  The label
// order is fixed by the conformance anchor at u_i:
//   inverse_entry(3,4,(0,0)) = +1/(x(1+x)).
struct InverseEntrySpec {
    int i = 1, j = 1;
    int m = 0, n = 0;
};

// Composite product trapezoid rule, doubling N until the relative change
// drops below tol; returns the torus mean of the integrand.
cplx torus_integral(const std::function<cplx(cplx, cplx)>& f, double tol = 1e-10,
                    int n_start = 16, int n_cap = 1 << 14);

// log Z per fundamental domain: (1/2) * torus mean of log P(z,w).
// At u = u_c evaluates u_c(1-eps) for eps in {1e-3, 5e-4, 2.5e-4} on an
// offset grid and Richardson-extrapolates in {1, eps*log(eps), eps}.
double log_partition_density(const ModelParams& p);

// H(m,n): torus mean of z^m w^n / P.  Real; throws CriticalSingularity
// within 1e-8 of u_c.
double fourier_coefficient(const ModelParams& p, int m, int n);

// Critical-coefficient with the (-1)^{m-n} subtraction, normalized by
// -x^2 so the x->0 limit is the combinatorial value (-1)^{m-n}(m+n).
// (The raw subtracted torus integral carries a -1/x^2 scale; see
// docs/conventions.md.)  Requires u = u_c(x) and m, n >= 0.
double regularized_coefficient(const ModelParams& p, int m, int n);

enum class EntryRoute {
    Auto,     // residue route off criticality; adaptive at u_c
    Torus2D,  // per-node 6x6 inversion on the product grid (SIMD-dispatched)
    Residue,  // 1-D foliation z = zeta*w with the inner circle by residues
    Ladder,   // u_c(1-eps) Richardson ladder (validation route at u_c)
};

cplx inverse_entry(const ModelParams& p, const InverseEntrySpec& spec,
                   EntryRoute route = EntryRoute::Auto, double tol = 1e-10);

// Laurent coefficients A_{s,t}, s,t in {-1,0,1}, of one adjugate entry:
// adj(K)(z,w)_{rc} = sum A_{s,t} z^s w^t.  Extracted exactly by a 3x3 DFT
// over cube roots of unity (the adjugate is Laurent of degree <= 1 in
// each variable).  Row/col are 0-based.
std::array<cplx, 9> adjugate_laurent(const ModelParams& p, int r, int c);

// Engine-level entry accessor (0-based row/col of K^{-1}); the public
// inverse_entry(i,j) maps to entry(j-1, i-1).
cplx engine_entry(const ModelParams& p, int r, int c, int m, int n,
                  EntryRoute route = EntryRoute::Auto, double tol = 1e-10);

// Count of grid nodes patched after a singular 6x6 factorization
// (measure-zero; replaced by the midpoint of the neighbors' values).
long singular_node_warnings();
void reset_singular_node_warnings();

// Name of the torus-kernel variant selected at runtime ("scalar",
// "avx2", "neon"); override with ARTIFACT_SIMD=scalar|avx2|neon|auto.
const char* active_kernel_name();

}  // namespace dimer
