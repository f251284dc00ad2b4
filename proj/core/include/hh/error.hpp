#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hh {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed polynomial text. `pos` is a 0-based byte offset into the input.
struct ParseError : Error {
    std::size_t pos;
    ParseError(std::string msg, std::size_t p)
        : Error(std::move(msg) + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Two operands live over different variable lists.
struct AmbientMismatch : Error {
    using Error::Error;
};

// No positive weight system makes the polynomial weight-homogeneous.
struct NotQuasiHomogeneous : Error {
    using Error::Error;
};

// The quotient has infinitely many standard monomials and no weight bound was given.
struct InfiniteWithoutBound : Error {
    using Error::Error;
};

// The Jacobian ideal has an infinite-dimensional quotient.
struct NonIsolatedSingularity : Error {
    using Error::Error;
};

// An operation requiring weight-homogeneous input received mixed-weight data.
struct NotHomogeneousGenerators : Error {
    using Error::Error;
};

// A multiplication map was requested between incompatible weight slices.
struct WeightMismatch : Error {
    using Error::Error;
};

// The Koszul complex is only built for 1 <= n <= 3 variables.
struct UnsupportedDimension : Error {
    using Error::Error;
};

// A degree expected to be finite still has nonzero slices in the margin band.
struct BoundTooSmall : Error {
    using Error::Error;
};

}  // namespace hh
