#pragma once

#include <stdexcept>
#include <string>

namespace conifold {

/// Base class of every error thrown by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two values built over different variable alphabets were combined.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic left the representable range.  Coefficients are
/// deliberately checked rather than silently wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Exact division by the denominator factors left a remainder: the rational
/// character is not a Laurent polynomial.
class NotPolynomial : public Error {
public:
    using Error::Error;
};

/// A denominator factor could not be oriented into the expansion cone
/// (it is the unit monomial, so (1 - m) vanishes identically).
class NonExpandable : public Error {
public:
    using Error::Error;
};

/// A tangent weight evaluated to zero under the given specialization; the
/// Euler weight would require inverting zero.  Callers re-draw.
class ZeroWeight : public Error {
public:
    using Error::Error;
};

/// The assembled tangent character failed to reduce to a finite character.
class NotFinite : public Error {
public:
    using Error::Error;
};

/// The assembled tangent character kept a nonzero unit-monomial coefficient,
/// i.e. the configuration has an unexpected fixed direction.
class FixedPart : public Error {
public:
    using Error::Error;
};

/// A caller-supplied argument violates a documented precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace conifold
