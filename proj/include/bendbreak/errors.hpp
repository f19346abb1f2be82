#pragma once

#include <stdexcept>
#include <string>

namespace bendbreak {

// Base class for all computation failures raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A boundary sum was not exactly divisible by the required square
// (L^2 or K^2). Always indicates an incorrectly assembled term list.
struct DivisibilityError : Error {
    using Error::Error;
};

// A count that must be nonnegative came out negative.
struct NegativeCountError : Error {
    using Error::Error;
};

// A base-case count was requested but is absent from the seed table.
struct MissingSeedError : Error {
    using Error::Error;
};

// A class with no irreducible rational representative was passed where
// a countable class is required.
struct NotRepresentableError : Error {
    using Error::Error;
};

// Two classes from different surface models were combined.
struct ModelMismatchError : Error {
    using Error::Error;
};

// Malformed textual input (class literals, seed files, cache files).
struct ParseError : Error {
    using Error::Error;
};

// An operation was invoked outside its stated domain.
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace bendbreak
