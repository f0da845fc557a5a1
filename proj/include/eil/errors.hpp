#pragma once

#include <stdexcept>
#include <string>

namespace eil {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad encodings, out-of-range vertices, loops, duplicate edges.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An exponential sweep would exceed its configured size cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A routine was called outside the class of graphs it is defined for.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A constructed certificate failed re-verification. If this fires, either the
/// implementation is wrong or the underlying theorem is.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed (e.g. d∘d ≠ 0 in a chain complex).
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace eil
