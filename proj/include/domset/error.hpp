#pragma once

#include <stdexcept>
#include <string>

namespace domset {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input (files, radii, parameters).
class InputError : public Error {
public:
    using Error::Error;
};

/// An exhaustive oracle was asked to solve an instance above its budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed. Always a bug or a violated guarantee.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

inline void ensure(bool condition, const std::string& what) {
    if (!condition) throw InvariantViolation(what);
}

} // namespace domset
