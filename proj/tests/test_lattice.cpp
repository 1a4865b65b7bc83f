#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dimer/lattice.hpp"

using namespace dimer;

namespace {
cplx unit_circle(double theta) { return {std::cos(theta), std::sin(theta)}; }
}  // namespace

TEST_CASE("kasteleyn matrix entries and antisymmetry") {
    const ModelParams p = make_params(0.5, 0.5);
    const ComplexMatrix6 k = build_kasteleyn(p, 1.0, 1.0);
    CHECK(k(0, 5) == cplx(0.25));   // b/z at z=1
    CHECK(k(2, 3) == cplx(0.5));    // the a-edge
    CHECK(antisymmetry_defect(k) == 0.0);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI), par(0.05, 0.95);
    for (int t = 0; t < 25; ++t) {
        const ModelParams q = make_params(par(rng), par(rng));
        const ComplexMatrix6 m = build_kasteleyn(q, unit_circle(ang(rng)), unit_circle(ang(rng)));
        CHECK(antisymmetry_defect(m) == 0.0);
    }
    CHECK_THROWS_AS(build_kasteleyn(p, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(build_kasteleyn(p, 1.0, 0.0), DomainError);
}

TEST_CASE("char_poly equals det K at random torus points") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI), par(0.05, 0.95);
    for (int t = 0; t < 100; ++t) {
        const ModelParams p = make_params(par(rng), par(rng));
        const cplx z = unit_circle(ang(rng)), w = unit_circle(ang(rng));
        const cplx d = det6(build_kasteleyn(p, z, w));
        const cplx cp = char_poly(p, z, w);
        CHECK(std::abs(d - cp) <= 1e-12 * std::abs(cp));
    }
}

TEST_CASE("char_poly direct substitution at z=w=1") {
    const double x = 0.5, u = 0.5, a = x, b = u * x;
    const ModelParams p = make_params(x, u);
    const double expect = a * a + 2 * b * b + a * a * b * b * b * b
                        + 4 * a * b * (1 - b * b) + 2 * b * b * (1 - a * a);
    CHECK(char_poly(p, 1.0, 1.0).real() == doctest::Approx(expect).epsilon(1e-14));
    CHECK(std::abs(char_poly(p, 1.0, 1.0).imag()) < 1e-15);
}

TEST_CASE("char_poly vanishes at (-1,-1) exactly at u_c") {
    // P(-1,-1) = [a(1-b^2) - 2b]^2 = x^2 (1 - 2u - u^2 x^2)^2, whose positive
    // root in u is u_c.
    for (double x : {0.1, 0.3, 0.5, 0.9}) {
        const double uc = critical_anisotropy(x);
        CHECK(std::abs(char_poly(make_params(x, uc), -1.0, -1.0)) < 1e-10);
        // and the factorized form matches the polynomial off-criticality
        for (double u : {0.2, 0.7}) {
            const double a = x, b = u * x;
            const double fac = a * (1 - b * b) - 2 * b;
            const cplx v = char_poly(make_params(x, u), -1.0, -1.0);
            CHECK(v.real() == doctest::Approx(fac * fac).epsilon(1e-12));
        }
    }
}

TEST_CASE("char_poly symmetric under (z,w) -> (1/z,1/w)") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI), par(0.05, 0.95);
    for (int t = 0; t < 100; ++t) {
        const ModelParams p = make_params(par(rng), par(rng));
        const cplx z = unit_circle(ang(rng)), w = unit_circle(ang(rng));
        const cplx v1 = char_poly(p, z, w), v2 = char_poly(p, 1.0 / z, 1.0 / w);
        CHECK(std::abs(v1 - v2) <= 1e-12 * std::abs(v1));
    }
}

TEST_CASE("special anisotropies") {
    CHECK(critical_anisotropy(1.0) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
    CHECK(independent_anisotropy(0.5)
          == doctest::Approx((1.0 - std::sqrt(0.75)) / 0.25).epsilon(1e-14));
    CHECK(gamma_anisotropy(0.1, GammaParam{0.0}) == 0.5);
    CHECK(gamma_anisotropy(0.1, GammaParam{1e-11}) == 0.5);
    for (double x : {0.1, 0.37, 0.8}) {
        CHECK(gamma_anisotropy(x, GammaParam{-1.0})
              == doctest::Approx(critical_anisotropy(x)).epsilon(1e-14));
        CHECK(gamma_anisotropy(x, GammaParam{1.0})
              == doctest::Approx(independent_anisotropy(x)).epsilon(1e-14));
    }
    // ordering on a grid
    for (int i = 1; i < 100; ++i) {
        const double x = i / 100.0;
        const double uc = critical_anisotropy(x), ui = independent_anisotropy(x);
        CHECK(uc < ui);
        CHECK(ui < 1.0);
    }
    CHECK_THROWS_AS(gamma_anisotropy(0.9, GammaParam{2.0}), DomainError);
}

TEST_CASE("dual anisotropy involution") {
    const ModelParams p = make_params(0.2, 0.3);
    const ModelParams d = dual_anisotropy(p);
    CHECK(d.u == doctest::Approx(83.33333333333333).epsilon(1e-12));
    const ModelParams dd = dual_anisotropy(d);
    CHECK(dd.u == doctest::Approx(p.u).epsilon(1e-14));
    // u_c maps to the companion critical point (1+sqrt(1+x^2))/x^2
    const double x = 0.4;
    const ModelParams c = dual_anisotropy(make_params(x, critical_anisotropy(x)));
    CHECK(c.u == doctest::Approx((1.0 + std::sqrt(1.0 + x * x)) / (x * x)).epsilon(1e-12));
    CHECK_THROWS_AS(dual_anisotropy(make_params(0.5, 2.0)), DomainError);
}

TEST_CASE("spectral roots: membership and regime classification") {
    auto is_root = [](const ModelParams& p, cplx v) {
        return std::abs(a_squared(p, v)) < 1e-10;
    };
    {
        const ModelParams p = make_params(0.5, 0.3);
        const RootProfile rp = spectral_roots(p);
        CHECK(rp.tag == Regime::BelowCritical);
        CHECK(rp.r.imag() == 0.0);
        CHECK(rp.r.real() > 1.0);
        CHECK(rp.s.real() > rp.r.real());
        for (cplx v : {rp.r, rp.s, 1.0 / rp.r, 1.0 / rp.s}) CHECK(is_root(p, v));
    }
    {
        const ModelParams p = make_params(0.5, critical_anisotropy(0.5));
        const RootProfile rp = spectral_roots(p);
        CHECK(rp.tag == Regime::Critical);
        CHECK(std::abs(rp.r - 1.0) < 1e-10);
        CHECK(rp.s.real() > 1.0);
        for (cplx v : {rp.r, rp.s, 1.0 / rp.s}) CHECK(is_root(p, v));
    }
    {
        const double um = 0.5 * (critical_anisotropy(0.5) + independent_anisotropy(0.5));
        const ModelParams p = make_params(0.5, um);
        const RootProfile rp = spectral_roots(p);
        CHECK(rp.tag == Regime::Intermediate);
        CHECK(rp.r.real() < 1.0);
        CHECK(rp.s.real() > 1.0);
        for (cplx v : {rp.r, rp.s, 1.0 / rp.r, 1.0 / rp.s}) CHECK(is_root(p, v));
    }
    {
        const ModelParams p = make_params(0.5, independent_anisotropy(0.5));
        const RootProfile rp = spectral_roots(p);
        CHECK(rp.tag == Regime::Independent);
        CHECK(std::abs(rp.r) < 1.0);
        for (cplx v : {rp.r, rp.s}) CHECK(is_root(p, v));
    }
    {
        const ModelParams p = make_params(0.5, 0.9);
        const RootProfile rp = spectral_roots(p);
        CHECK(rp.tag == Regime::AboveIndependent);
        CHECK(std::abs(rp.r) < 1.0);
        CHECK(std::abs(rp.s - 1.0 / std::conj(rp.r)) < 1e-10);
        for (cplx v : {rp.r, rp.s, 1.0 / rp.r, 1.0 / rp.s}) CHECK(is_root(p, v));
    }
}

TEST_CASE("regime switch points localize to u_c and u_i by bisection") {
    const double x = 0.37;
    auto tag_of = [&](double u) { return spectral_roots(make_params(x, u)).tag; };
    auto bisect = [&](double lo, double hi) {
        const Regime tlo = tag_of(lo);
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            // skip the measure-zero equality tags during the sweep
            Regime tm = tag_of(mid);
            if (tm == tlo) lo = mid; else hi = mid;
        }
        return 0.5 * (lo + hi);
    };
    CHECK(std::fabs(bisect(0.05, 0.5 * (critical_anisotropy(x) + independent_anisotropy(x)))
                    - critical_anisotropy(x)) < 1e-8);
    CHECK(std::fabs(bisect(0.5 * (critical_anisotropy(x) + independent_anisotropy(x)), 0.99)
                    - independent_anisotropy(x)) < 1e-8);
}
