#pragma once

#include <stdexcept>
#include <string>

namespace oloid {

// Base for every error raised by the library. Each derived type names the
// violated precondition in its message.
class OloidError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the real domain of a formula (e.g. 1 + 2 cos t < 0).
class DomainError : public OloidError {
public:
    using OloidError::OloidError;
};

// A denominator of a parametrization vanishes.
class PoleError : public OloidError {
public:
    using OloidError::OloidError;
};

// lambda in {0, 1}: the member of the family is a circle, not a quadric.
class DegenerateError : public OloidError {
public:
    using OloidError::OloidError;
};

// Tangent requested where 1 + 2 cos t = 0 and the derivative diverges.
class BoundaryError : public OloidError {
public:
    using OloidError::OloidError;
};

// lambda in (-1, 2): the touching curve has no poles.
class NoPolesError : public OloidError {
public:
    using OloidError::OloidError;
};

class UnsupportedLambdaError : public OloidError {
public:
    using OloidError::OloidError;
};

// Integration interval or sample sequence is not increasing.
class NonMonotoneError : public OloidError {
public:
    using OloidError::OloidError;
};

}  // namespace oloid
