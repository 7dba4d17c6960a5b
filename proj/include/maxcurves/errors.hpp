#pragma once

#include <stdexcept>
#include <string>

namespace maxcurves {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands belong to different field specifications.
class FieldMismatchError : public Error {
public:
    using Error::Error;
};

/// Inversion of the zero element.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// An enumeration or search exceeded its configured budget.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// Invalid parameters or a violated precondition.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed; indicates a bug or inconsistent input data.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace maxcurves
