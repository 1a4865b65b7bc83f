#include "dimer/pfaffian.hpp"

#include <algorithm>
#include <cmath>

namespace dimer {

AntisymmetricMatrix::AntisymmetricMatrix(int dim) : n_(dim) {
    if (dim < 0) throw DomainError("AntisymmetricMatrix: negative dimension");
    up_.assign(static_cast<size_t>(dim) * (dim > 0 ? dim - 1 : 0) / 2, cplx{});
}

size_t AntisymmetricMatrix::idx(int i, int j) const {
    // packed strict upper triangle, row-major
    return static_cast<size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

cplx AntisymmetricMatrix::at(int i, int j) const {
    if (i == j) return {};
    if (i < j) return up_[idx(i, j)];
    return -up_[idx(j, i)];
}

void AntisymmetricMatrix::set(int i, int j, cplx v) {
    if (i == j) {
        if (v != cplx{}) throw NotAntisymmetric("diagonal entry must vanish");
        return;
    }
    if (i < j) up_[idx(i, j)] = v;
    else up_[idx(j, i)] = -v;
}

AntisymmetricMatrix AntisymmetricMatrix::from_dense(const std::vector<cplx>& a,
                                                    int dim, double tol) {
    if (static_cast<int>(a.size()) != dim * dim)
        throw DomainError("from_dense: size mismatch");
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            const cplx defect = a[static_cast<size_t>(i) * dim + j]
                              + a[static_cast<size_t>(j) * dim + i];
            if (std::abs(defect) > tol)
                throw NotAntisymmetric("antisymmetry defect " + std::to_string(std::abs(defect))
                                       + " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    AntisymmetricMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            m.up_[m.idx(i, j)] = a[static_cast<size_t>(i) * dim + j];
    return m;
}

std::vector<cplx> AntisymmetricMatrix::dense() const {
    std::vector<cplx> d(static_cast<size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            d[static_cast<size_t>(i) * n_ + j] = at(i, j);
    return d;
}

cplx pfaffian(const AntisymmetricMatrix& a) {
    const int n = a.dim();
    if (n % 2 != 0) throw OddDimension("pfaffian: dimension must be even");
    if (n == 0) return 1.0;
    std::vector<cplx> m = a.dense();
    auto at = [&m, n](int i, int j) -> cplx& { return m[static_cast<size_t>(i) * n + j]; };
    cplx pf = 1.0;
    for (int k = 0; k + 1 < n; k += 2) {
        // largest |m(k,j)|, j > k; ties keep the lowest index
        int piv = k + 1;
        double best = std::abs(at(k, k + 1));
        for (int j = k + 2; j < n; ++j) {
            const double mag = std::abs(at(k, j));
            if (mag > best) { best = mag; piv = j; }
        }
        if (best == 0.0) return 0.0;
        if (piv != k + 1) {
            // swapping row+column pair flips the Pfaffian sign
            for (int t = 0; t < n; ++t) std::swap(at(piv, t), at(k + 1, t));
            for (int t = 0; t < n; ++t) std::swap(at(t, piv), at(t, k + 1));
            pf = -pf;
        }
        const cplx pv = at(k, k + 1);
        pf *= pv;
        // skew Schur update of the trailing block:
        // m(i,j) += (s_i r_j - r_i s_j)/pv with r = row k, s = row k+1.
        for (int i = k + 2; i < n; ++i) {
            const cplx ri = at(k, i) / pv;
            const cplx si = at(k + 1, i);
            if (ri == cplx{} && si == cplx{}) continue;
            for (int j = k + 2; j < n; ++j)
                at(i, j) += si * at(k, j) / pv - ri * at(k + 1, j);
        }
    }
    return pf;
}

namespace {

cplx pf_rec(std::vector<cplx>& m, std::vector<int>& act) {
    const size_t n = act.size();
    if (n == 0) return 1.0;
    const int i0 = act[0];
    const int dim = static_cast<int>(std::sqrt(static_cast<double>(m.size())) + 0.5);
    cplx sum = 0.0;
    for (size_t jj = 1; jj < n; ++jj) {
        const int j = act[jj];
        const cplx kij = m[static_cast<size_t>(i0) * dim + j];
        if (kij == cplx{}) continue;
        std::vector<int> rest;
        rest.reserve(n - 2);
        for (size_t t = 1; t < n; ++t)
            if (t != jj) rest.push_back(act[t]);
        const double sign = (jj % 2 == 1) ? 1.0 : -1.0;
        sum += sign * kij * pf_rec(m, rest);
    }
    return sum;
}

}  // namespace

cplx pfaffian_recursive(const AntisymmetricMatrix& a) {
    const int n = a.dim();
    if (n % 2 != 0) throw OddDimension("pfaffian_recursive: dimension must be even");
    if (n > 8) throw DomainError("pfaffian_recursive: oracle limited to dim <= 8");
    if (n == 0) return 1.0;
    std::vector<cplx> m = a.dense();
    std::vector<int> act(n);
    for (int i = 0; i < n; ++i) act[i] = i;
    return pf_rec(m, act);
}

}  // namespace dimer
