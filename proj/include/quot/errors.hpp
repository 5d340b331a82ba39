#pragma once

#include <stdexcept>
#include <string>

namespace quot {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact arithmetic / linear algebra
struct FieldMismatch : Error {
    using Error::Error;
};
struct NotPrime : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

// framed representations
struct SingularGauge : Error {
    using Error::Error;
};
struct DuplicateSupport : Error {
    using Error::Error;
};
struct NotStable : Error {
    using Error::Error;
};
struct NotCommuting : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct WrongLoopCount : Error {
    using Error::Error;
};

// ADHM data
struct NotOnVariety : Error {
    using Error::Error;
};

// slope arithmetic
struct ZeroRank : Error {
    using Error::Error;
};
struct ParameterOutOfRange : Error {
    using Error::Error;
};

// exhaustive enumeration
struct BudgetExceeded : Error {
    using Error::Error;
};
struct NonIntegralOrbitCount : Error {
    using Error::Error;
};

} // namespace quot
