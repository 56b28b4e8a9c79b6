#pragma once

#include <stdexcept>
#include <string>

namespace arbor {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed map/expression input. `position` is a 0-based byte offset
/// into the input string.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// A configured resource bound (degree cap, precision ceiling,
/// factorization degree cap) was exceeded.
struct ResourceCapExceeded : Error {
    using Error::Error;
};

/// A map has critical points outside Q; certificate machinery declines.
struct IrrationalCriticalPoints : Error {
    using Error::Error;
};

/// An operation's stated precondition does not hold for the given input.
struct PreconditionError : Error {
    using Error::Error;
};

/// An exact answer requires a complete factorization that the configured
/// effort budget could not deliver.
struct FactorizationIncomplete : Error {
    using Error::Error;
};

} // namespace arbor
