#pragma once

#include <array>
#include <complex>

namespace dimer {

using cplx = std::complex<double>;

// Dense 6x6 complex matrix holding the Kasteleyn matrix at one torus point.
// Row-major; indexed 0..5 for vertices v1..v6.
struct ComplexMatrix6 {
    std::array<cplx, 36> e{};

    cplx& operator()(int i, int j) { return e[static_cast<size_t>(i) * 6 + j]; }
    const cplx& operator()(int i, int j) const { return e[static_cast<size_t>(i) * 6 + j]; }
};

// Determinant by LU with partial pivoting (6x6, done in place on a copy).
cplx det6(const ComplexMatrix6& m);

// Inverse by Gauss-Jordan with partial pivoting.  |pivot| < singular_tol
// reports failure through the ok flag; the caller decides how to recover.
ComplexMatrix6 inverse6(const ComplexMatrix6& m, bool& ok, double singular_tol = 1e-13);

// Max |K(i,j) + K(j,i)| over all pairs: antisymmetry defect.
double antisymmetry_defect(const ComplexMatrix6& m);

}  // namespace dimer
