#pragma once

#include <stdexcept>
#include <string>

namespace eolab {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A q-exponent outside 0..N was requested or produced.
class OrderOverflowError : public Error {
public:
    using Error::Error;
};

// Two series with different truncation orders were combined.
class OrderMismatchError : public Error {
public:
    using Error::Error;
};

// An exact coefficient left the 64-bit range.
class CoefficientOverflowError : public Error {
public:
    using Error::Error;
};

class NotInvertibleError : public Error {
public:
    using Error::Error;
};

class NonconvergentProductError : public Error {
public:
    using Error::Error;
};

class DivergentSumError : public Error {
public:
    using Error::Error;
};

// Input outside the domain of a set predicate or bijection.
class DomainError : public Error {
public:
    using Error::Error;
};

// Parameters for which a truncated identity check would not converge.
class ParameterError : public Error {
public:
    using Error::Error;
};

} // namespace eolab
