#pragma once

#include <stdexcept>
#include <string>

namespace flecklab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter violated an operation's stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// Fermat quotient of a multiple of p.
struct NonUnitError : Error {
    using Error::Error;
};

// Rational reduction mod m with gcd(denominator, m) > 1.
struct NonUnitDenominatorError : Error {
    using Error::Error;
};

// Requested sum length exceeds the configured bound.
struct ResourceLimitError : Error {
    using Error::Error;
};

// An exact division guaranteed by theory failed; indicates a bug (or a
// falsified theorem), so this is fatal unless a caller opts to catch it.
struct IntegralityError : Error {
    using Error::Error;
};

} // namespace flecklab
