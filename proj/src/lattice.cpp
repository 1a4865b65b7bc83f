#include "dimer/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace dimer {

cplx det6(const ComplexMatrix6& m) {
    std::array<cplx, 36> a = m.e;
    cplx det = 1.0;
    for (int k = 0; k < 6; ++k) {
        int piv = k;
        double best = std::abs(a[static_cast<size_t>(k) * 6 + k]);
        for (int i = k + 1; i < 6; ++i) {
            double mag = std::abs(a[static_cast<size_t>(i) * 6 + k]);
            if (mag > best) { best = mag; piv = i; }
        }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (int j = 0; j < 6; ++j)
                std::swap(a[static_cast<size_t>(piv) * 6 + j], a[static_cast<size_t>(k) * 6 + j]);
            det = -det;
        }
        const cplx pv = a[static_cast<size_t>(k) * 6 + k];
        det *= pv;
        for (int i = k + 1; i < 6; ++i) {
            const cplx f = a[static_cast<size_t>(i) * 6 + k] / pv;
            if (f == cplx{}) continue;
            for (int j = k; j < 6; ++j)
                a[static_cast<size_t>(i) * 6 + j] -= f * a[static_cast<size_t>(k) * 6 + j];
        }
    }
    return det;
}

ComplexMatrix6 inverse6(const ComplexMatrix6& m, bool& ok, double singular_tol) {
    std::array<cplx, 36> a = m.e;
    ComplexMatrix6 inv;
    for (int i = 0; i < 6; ++i) inv(i, i) = 1.0;
    ok = true;
    for (int k = 0; k < 6; ++k) {
        int piv = k;
        double best = std::abs(a[static_cast<size_t>(k) * 6 + k]);
        for (int i = k + 1; i < 6; ++i) {
            double mag = std::abs(a[static_cast<size_t>(i) * 6 + k]);
            if (mag > best) { best = mag; piv = i; }
        }
        if (best < singular_tol) { ok = false; return inv; }
        if (piv != k) {
            for (int j = 0; j < 6; ++j) {
                std::swap(a[static_cast<size_t>(piv) * 6 + j], a[static_cast<size_t>(k) * 6 + j]);
                std::swap(inv(piv, j), inv(k, j));
            }
        }
        const cplx pv = a[static_cast<size_t>(k) * 6 + k];
        for (int j = 0; j < 6; ++j) {
            a[static_cast<size_t>(k) * 6 + j] /= pv;
            inv(k, j) /= pv;
        }
        for (int i = 0; i < 6; ++i) {
            if (i == k) continue;
            const cplx f = a[static_cast<size_t>(i) * 6 + k];
            if (f == cplx{}) continue;
            for (int j = 0; j < 6; ++j) {
                a[static_cast<size_t>(i) * 6 + j] -= f * a[static_cast<size_t>(k) * 6 + j];
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

double antisymmetry_defect(const ComplexMatrix6& m) {
    double worst = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            worst = std::max(worst, std::abs(m(i, j) + m(j, i)));
    return worst;
}

CharPolyCoeffs char_poly_coeffs(const ModelParams& p) {
    const double a = p.a(), b = p.b();
    CharPolyCoeffs c;
    c.c0 = a * a + 2.0 * b * b + a * a * b * b * b * b;
    c.c1 = a * b * (1.0 - b * b);
    c.c2 = b * b * (1.0 - a * a);
    return c;
}

ComplexMatrix6 build_kasteleyn(const ModelParams& p, cplx z, cplx w) {
    if (z == cplx{} || w == cplx{})
        throw DomainError("build_kasteleyn: z and w must be nonzero");
    const double a = p.a(), b = p.b();
    ComplexMatrix6 k;
    auto set = [&k](int i, int j, cplx v) {
        k(i, j) = v;
        k(j, i) = -v;
    };
    // Oriented decoration triangles (v1,v2,v3) and (v4,v5,v6).
    set(0, 1, -1.0); set(0, 2, 1.0); set(1, 2, -1.0);
    set(3, 4, 1.0);  set(3, 5, -1.0); set(4, 5, 1.0);
    // Vertical a-edge joining the triangles.
    set(2, 3, a);
    // b-edges to the neighboring domains in the z and w directions.
    set(0, 5, b / z);
    set(1, 4, b / w);
    return k;
}

cplx char_poly(const ModelParams& p, cplx z, cplx w) {
    if (z == cplx{} || w == cplx{})
        throw DomainError("char_poly: z and w must be nonzero");
    const CharPolyCoeffs c = char_poly_coeffs(p);
    return c.c0 + c.c1 * (z + 1.0 / z + w + 1.0 / w) + c.c2 * (z / w + w / z);
}

cplx a_squared(const ModelParams& p, cplx v) {
    const CharPolyCoeffs c = char_poly_coeffs(p);
    const cplx t = c.c2 * (1.0 + v * v) + c.c0 * v;
    const cplx onepv = 1.0 + v;
    return t * t - 4.0 * c.c1 * c.c1 * v * onepv * onepv;
}

const char* regime_name(Regime t) {
    switch (t) {
        case Regime::BelowCritical:    return "below_critical";
        case Regime::Critical:         return "critical";
        case Regime::Intermediate:     return "intermediate";
        case Regime::Independent:      return "independent";
        case Regime::AboveIndependent: return "above_independent";
    }
    return "unknown";
}

RootProfile spectral_roots(const ModelParams& p) {
    if (!(p.x > 0.0) || !(p.x < 1.0))
        throw DomainError("spectral_roots: require 0 < x < 1");
    if (!(p.u > 0.0) || !(p.u < 1.0 / p.x))
        throw DomainError("spectral_roots: require 0 < u < 1/x");
    const CharPolyCoeffs c = char_poly_coeffs(p);
    const double uc = critical_anisotropy(p.x);
    const double ui = independent_anisotropy(p.x);

    // A^2(v) factors through y = v + 1/v:
    //   A^2 = v^2 [ (c2 y + c0)^2 - 4 c1^2 (y + 2) ],
    // so the two y-roots give the four v-roots in reciprocal pairs.
    const cplx disc = cplx(c.c1 * c.c1 - c.c0 * c.c2 + 2.0 * c.c2 * c.c2);
    const cplx sq = std::sqrt(disc);
    const cplx y1 = (2.0 * c.c1 * c.c1 - c.c0 * c.c2 - 2.0 * c.c1 * sq) / (c.c2 * c.c2);
    const cplx y2 = (2.0 * c.c1 * c.c1 - c.c0 * c.c2 + 2.0 * c.c1 * sq) / (c.c2 * c.c2);

    auto pair_roots = [](cplx y) {
        // v + 1/v = y; return {inside, outside} by modulus.
        const cplx d = std::sqrt(y * y - 4.0);
        cplx va = (y + d) / 2.0, vb = (y - d) / 2.0;
        if (std::abs(va) > std::abs(vb)) std::swap(va, vb);
        return std::array<cplx, 2>{va, vb};
    };
    const auto p1 = pair_roots(y1);
    const auto p2 = pair_roots(y2);

    RootProfile out;
    const double rel = 1e-12 * std::max(1.0, std::fabs(p.u));
    if (std::fabs(p.u - uc) <= rel) {
        // Double root at 1; report r = 1 and s = the outside root of the
        // other pair.
        out.tag = Regime::Critical;
        out.r = 1.0;
        const double d1 = std::abs(std::abs(p1[1]) - 1.0);
        const double d2 = std::abs(std::abs(p2[1]) - 1.0);
        out.s = (d1 > d2) ? p1[1] : p2[1];
        out.s = cplx(std::abs(out.s.real()), 0.0);
        return out;
    }
    if (std::fabs(p.u - ui) <= rel) {
        // Branch points collide in conjugate pairs: r (twice), 1/r (twice).
        out.tag = Regime::Independent;
        cplx inner = (std::abs(p1[0]) < 1.0) ? p1[0] : p2[0];
        out.r = cplx(inner.real(), 0.0);
        out.s = 1.0 / out.r;
        return out;
    }
    if (p.u < uc) {
        // All real; outside roots are r < s (imaginary dust dropped).
        out.tag = Regime::BelowCritical;
        double o1 = p1[1].real(), o2 = p2[1].real();
        if (std::fabs(o1) > std::fabs(o2)) std::swap(o1, o2);
        out.r = o1;
        out.s = o2;
        return out;
    }
    if (p.u < ui) {
        // Real with r < 1 < s: the outside root closer to 1 is 1/r.
        out.tag = Regime::Intermediate;
        double o1 = p1[1].real(), o2 = p2[1].real();
        if (std::fabs(o1) > std::fabs(o2)) std::swap(o1, o2);
        out.r = 1.0 / o1;
        out.s = o2;
        return out;
    }
    // Above u_i: complex r with |r| < 1, s = 1/conj(r).
    out.tag = Regime::AboveIndependent;
    cplx inner = p1[0];
    if (inner.imag() < 0.0) inner = std::conj(inner);
    out.r = inner;
    out.s = 1.0 / std::conj(inner);
    return out;
}

}  // namespace dimer
