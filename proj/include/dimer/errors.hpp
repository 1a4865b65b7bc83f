#pragma once

#include <stdexcept>
#include <string>

namespace dimer {

// Common base so callers can catch any library failure in one clause.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter outside the admissible region (x, u, gamma, grid sizes, ...).
struct DomainError : Error {
    using Error::Error;
};

// Adaptive scheme hit its refinement cap without meeting the tolerance.
struct NonConvergence : Error {
    using Error::Error;
};

// Fourier-coefficient request too close to the critical anisotropy, where
// the integrand loses integrability.
struct CriticalSingularity : Error {
    using Error::Error;
};

// Kasteleyn matrix numerically singular at a quadrature node.
struct SingularNode : Error {
    using Error::Error;
};

// Pfaffian of an odd-dimensional matrix requested.
struct OddDimension : Error {
    using Error::Error;
};

// Matrix fails the antisymmetry check beyond tolerance.
struct NotAntisymmetric : Error {
    using Error::Error;
};

// A probability landed outside [-1e-9, 1+1e-9].
struct OutOfRange : Error {
    using Error::Error;
};

// Duplicate lattice points in a correlation request.
struct CoincidentPoints : Error {
    using Error::Error;
};

// Residue that should be real carries imaginary part >= 1e-9.
struct ImaginaryResidue : Error {
    using Error::Error;
};

// Correlation-length fit attempted on data that underflowed.
struct FitDegenerate : Error {
    using Error::Error;
};

// Monte Carlo chain too short for the requested estimator.
struct ChainTooShort : Error {
    using Error::Error;
};

// Spin->dimer local completion failed (would indicate a table bug).
struct InconsistentLocalState : Error {
    using Error::Error;
};

// Elliptic/branch-tracking evaluation failed to converge.
struct BranchFailure : Error {
    using Error::Error;
};

}  // namespace dimer
