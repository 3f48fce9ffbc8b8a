#pragma once

#include <stdexcept>
#include <string>

namespace qbt {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Argument too close to a pole of the evaluated function.
struct PoleArgument : Error {
    using Error::Error;
};

// Two susceptibility pole rates coincide; partial fractions undefined.
struct DegeneratePoles : Error {
    using Error::Error;
};

// Two normal-mode frequencies coincide; residue formula undefined.
struct DegenerateModes : Error {
    using Error::Error;
};

// Conjugate-pair cancellation failed: a physical quantity came out with a
// non-negligible imaginary part, which signals a coefficient bug upstream.
struct ImaginaryResidue : Error {
    using Error::Error;
};

// Series truncation budget exhausted before the tolerance was met.
struct SeriesNotConverged : Error {
    using Error::Error;
};

// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureFailure : Error {
    using Error::Error;
};

// The quadratic form of a bath Hamiltonian is not positive definite.
struct NotPositiveDefinite : Error {
    using Error::Error;
};

// Configuration / input validation failure (CLI, JSON schemas).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace qbt
