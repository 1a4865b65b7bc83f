#pragma once

#include <cmath>

#include "dimer/errors.hpp"

namespace dimer {

// Temperature x and anisotropy u of the Fisher-lattice dimer model.
// Vertical a-edges carry weight a = x, the non-vertical non-decoration
// b-edges carry b = u*x, decoration edges carry 1.
struct ModelParams {
    double x = 0.0;
    double u = 0.0;

    double a() const { return x; }
    double b() const { return u * x; }
};

// Window parameter gamma; u_gamma interpolates between the critical and
// independent anisotropies (gamma = -1 and +1 respectively).
struct GammaParam {
    double gamma = 0.0;
};

// Validates 0 < x <= 1 and u > 0.  u >= 1 is admitted: the duality map and
// probability comparisons are exercised at large anisotropy.
inline ModelParams make_params(double x, double u) {
    if (!(x > 0.0) || !(x <= 1.0))
        throw DomainError("ModelParams: require 0 < x <= 1, got x=" + std::to_string(x));
    if (!(u > 0.0))
        throw DomainError("ModelParams: require u > 0, got u=" + std::to_string(u));
    return ModelParams{x, u};
}

// u_c = (-1 + sqrt(1+x^2)) / x^2, the anti-ferromagnetic critical anisotropy.
inline double critical_anisotropy(double x) {
    if (!(x > 0.0) || !(x <= 1.0))
        throw DomainError("critical_anisotropy: require 0 < x <= 1");
    return (-1.0 + std::sqrt(1.0 + x * x)) / (x * x);
}

// u_i = (1 - sqrt(1-x^2)) / x^2, where the particle process is an
// independent (product) measure row by row.
inline double independent_anisotropy(double x) {
    if (!(x > 0.0) || !(x <= 1.0))
        throw DomainError("independent_anisotropy: require 0 < x <= 1");
    return (1.0 - std::sqrt(1.0 - x * x)) / (x * x);
}

// u_gamma = (1 - sqrt(1 - gamma x^2)) / (gamma x^2); removable singularity
// at gamma = 0 with limit 1/2.
inline double gamma_anisotropy(double x, GammaParam g) {
    if (!(x > 0.0) || !(x <= 1.0))
        throw DomainError("gamma_anisotropy: require 0 < x <= 1");
    const double gx2 = g.gamma * x * x;
    if (!(gx2 < 1.0))
        throw DomainError("gamma_anisotropy: require gamma*x^2 < 1");
    if (std::fabs(g.gamma) < 1e-10) return 0.5;
    return (1.0 - std::sqrt(1.0 - gx2)) / gx2;
}

// The involution u -> 1/(u x^2): local dimer statistics are invariant.
inline ModelParams dual_anisotropy(const ModelParams& p) {
    if (!(p.x > 0.0)) throw DomainError("dual_anisotropy: require x > 0");
    if (!(p.u < 1.0 / p.x))
        throw DomainError("dual_anisotropy: require u < 1/x");
    return ModelParams{p.x, 1.0 / (p.u * p.x * p.x)};
}

}  // namespace dimer
