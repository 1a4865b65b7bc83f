#pragma once

// Inner loops of the 2-D torus route for inverse-Kasteleyn entries:
// per-node 6x6 complex factorization and entry extraction, batched per
// ISA.  A fixed row interchange (0<->1, 2<->3, 4<->5) makes the diagonal
// of K structurally nonzero so the batched LU needs no data-dependent
// pivoting; lanes whose pivot falls below threshold are redone with the
// fully pivoted scalar path, and nodes singular even then are patched
// by the caller (counted as singular-node warnings).

#include <complex>
#include <vector>

#include "dimer/params.hpp"

namespace dimer {

struct EntrySumJob {
    double a = 0.0, b = 0.0;  // edge weights x, u*x
    int r = 0, c = 0;         // 0-based entry of K^{-1}
    int ncols = 0;            // z-nodes per row
    const cplx* z = nullptr;     // z nodes (row-invariant)
    const cplx* zmon = nullptr;  // z^{-m} weights
    cplx w;                      // this row's w node
    cplx wmon;                   // w^{-n} weight
    double pivot_tol = 1e-11;    // lane fallback threshold
};

struct RowResult {
    cplx sum;                 // pairwise sum over the row
    long fallback_nodes = 0;  // lanes redone with full pivoting
    long singular_nodes = 0;  // nodes singular even with full pivoting
};

using entry_row_fn = RowResult (*)(const EntrySumJob&);

RowResult entry_row_scalar(const EntrySumJob& job);
#if defined(DIMER_HAVE_AVX2)
RowResult entry_row_avx2(const EntrySumJob& job);
#endif
#if defined(DIMER_HAVE_NEON)
RowResult entry_row_neon(const EntrySumJob& job);
#endif

// Runtime selection: CPU feature detection, overridable via the
// ARTIFACT_SIMD environment variable.
entry_row_fn active_entry_row_kernel();

// Fully pivoted scalar evaluation of one node's entry value
// (K^{-1}(z,w))_{rc} * zmon * wmon; ok=false when K is singular there.
cplx entry_node_full_pivot(double a, double b, cplx z, cplx w, int r, int c,
                           cplx zmon, cplx wmon, bool& ok);

}  // namespace dimer
