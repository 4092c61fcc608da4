#pragma once

#include <stdexcept>
#include <string>

namespace qdissect {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Coefficient of q^n requested with n >= precision.
struct QueryBeyondPrecision : Error {
    using Error::Error;
};

// Inversion (or negative power) of a series whose leading coefficient vanishes.
struct ZeroLeadingCoefficient : Error {
    using Error::Error;
};

// Modular reduction hit a coefficient denominator not invertible mod M.
struct NonInvertibleDenominator : Error {
    using Error::Error;
};

// Dissection step applied to a representation outside both admissible classes.
struct InadmissibleRepresentation : Error {
    using Error::Error;
};

// Operation that needs at least one term applied to an empty representation.
struct EmptyRepresentation : Error {
    using Error::Error;
};

// Claim id not present in the registry.
struct UnknownClaim : Error {
    using Error::Error;
};

} // namespace qdissect
