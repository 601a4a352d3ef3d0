#pragma once

#include <stdexcept>

namespace nerontrace {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input document (syntax, missing keys, wrong types).
struct ParseError : Error {
    using Error::Error;
};

// Structurally invalid fiber: disconnected graph, self-loop, bad residue
// characteristic, unresolved edge endpoint, nonpositive multiplicity.
struct ValidationError : Error {
    using Error::Error;
};

// expand() called on a product with a negative exponent.
struct NegativeExponent : Error {
    using Error::Error;
};

// Tame branch requested without the caller asserting its hypothesis.
struct HypothesisNotAsserted : Error {
    using Error::Error;
};

// A component with multiplicity divisible by p has nonzero Euler
// characteristic, contradicting cohomological tameness.
struct TamenessViolation : Error {
    using Error::Error;
};

// The characteristic polynomial has a pole at T=1 (negative Phi_1 exponent).
struct PoleAtOne : Error {
    using Error::Error;
};

// Operation requires abelian rank and toric rank both zero.
struct NotPurelyAdditive : Error {
    using Error::Error;
};

// An exact rational that should have been an integer was not; the input
// graph cannot arise from a relatively minimal model.
struct NonIntegralResult : Error {
    using Error::Error;
};

// Component-group order needed but neither computable nor user-supplied.
struct PhiUnavailable : Error {
    using Error::Error;
};

// Companion matrix requested for a non-monic polynomial.
struct NotMonic : Error {
    using Error::Error;
};

// Two independent computation routes disagreed.  Either a library bug or
// an unrealizable graph that slipped past validation.
struct InternalInconsistency : Error {
    using Error::Error;
};

} // namespace nerontrace
