#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicalo {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation hit a singularity (division by zero, log/sqrt on the branch
// cut or at the origin, pow with zero base and non-positive-real exponent,
// or a non-finite intermediate).
struct DomainError : Error {
    using Error::Error;
};

// Expression text is not well formed. `offset` is the byte offset of the
// first offending character; `expected` lists the token classes that would
// have been accepted there.
struct ParseError : Error {
    ParseError(std::string msg, std::size_t offset, std::string expected)
        : Error(std::move(msg)), offset(offset), expected(std::move(expected)) {}
    std::size_t offset;
    std::string expected;
};

// Surface of centers is rank deficient at the sample (X_u x X_v ~ 0), or a
// finite-difference chart degenerated (EG - F^2 <= 0).
struct DegenerateChart : Error {
    using Error::Error;
};

// Delta_1 R > 1: the congruence has no real envelope at the sample.
struct NoRealEnvelope : Error {
    using Error::Error;
};

// |f'(tau)| below threshold; the construction is undefined there.
struct ZeroDerivative : Error {
    using Error::Error;
};

// A grid operation found no usable (non-hole) nodes.
struct EmptyGrid : Error {
    using Error::Error;
};

// Requested a finite-difference stencil at a node without a full
// non-hole neighborhood.
struct BoundaryNode : Error {
    using Error::Error;
};

// Normal points straight up; the normal geodesic has no finite ideal
// endpoint.
struct VerticalEscape : Error {
    using Error::Error;
};

// Null-curve matrix cannot be projected (denominator underflow or
// non-finite entries).
struct InvalidMatrix : Error {
    using Error::Error;
};

}  // namespace bicalo
