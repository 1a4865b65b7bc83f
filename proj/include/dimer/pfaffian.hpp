#pragma once

#include <complex>
#include <vector>

#include "dimer/errors.hpp"
#include "dimer/mat6.hpp"

namespace dimer {

// Dense even-dimensional antisymmetric matrix.  Storage keeps the strict
// upper triangle; the mirror is implied, so A = -A^T holds exactly.
class AntisymmetricMatrix {
  public:
    explicit AntisymmetricMatrix(int dim);

    // Validates |a[i][j] + a[j][i]| <= tol and |diag| <= tol, then keeps
    // the upper triangle.  Throws NotAntisymmetric otherwise.
    static AntisymmetricMatrix from_dense(const std::vector<cplx>& a, int dim,
                                          double tol = 1e-12);

    int dim() const { return n_; }
    cplx at(int i, int j) const;
    void set(int i, int j, cplx v);  // setting (i,j) fixes (j,i) = -v
    std::vector<cplx> dense() const;

  private:
    int n_;
    std::vector<cplx> up_;  // (i,j), i<j, row-major packed
    size_t idx(int i, int j) const;
};

// Pfaffian by skew-symmetric elimination with greedy largest-magnitude
// pivoting (ties to the lowest index).  Pf([[0,a],[-a,0]]) = a; empty
// matrix gives 1.  Throws OddDimension for odd dim.
cplx pfaffian(const AntisymmetricMatrix& a);

// Recursive expansion along the first row; O(n!!) — test oracle for
// dim <= 8 (larger inputs rejected).
cplx pfaffian_recursive(const AntisymmetricMatrix& a);

}  // namespace dimer
