#pragma once

#include <stdexcept>
#include <string>

namespace fbvp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (alpha outside [0,1],
/// time outside the solution interval, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A fuzzy number violates its representation invariants (ordering,
/// monotone branches, unique vertex).
class FuzzyNumberError : public Error {
public:
    using Error::Error;
};

/// A fuzzy number has no unique vertex, so it cannot be split into a crisp
/// part plus an uncertain part centred at zero.
class VertexError : public FuzzyNumberError {
public:
    using FuzzyNumberError::FuzzyNumberError;
};

/// Malformed or inconsistent problem data.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The crisp boundary value problem has no unique solution (the boundary
/// matrix is singular), hence no fuzzy solution is produced.
class NonUniqueCrispSolution : public Error {
public:
    using Error::Error;
};

/// A state became non-finite during integration.
class IntegrationError : public Error {
public:
    using Error::Error;
};

/// Two objects that must share a time grid do not.
class GridMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace fbvp
