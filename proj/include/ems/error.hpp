#pragma once

#include <stdexcept>
#include <string>

namespace ems {

// Base for all errors raised by the library. The CLI maps the concrete
// subclasses onto distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad or inconsistent configuration (parameters, flags, missing keys).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Bad input data: unreadable files, malformed CSV, gaps, invalid values.
class DataError : public Error {
public:
    using Error::Error;
};

class FormatError : public DataError {
public:
    using DataError::DataError;
};

class GapError : public DataError {
public:
    using DataError::DataError;
};

class ValidationError : public DataError {
public:
    using DataError::DataError;
};

// Argument outside the mathematical domain of a model function.
class DomainError : public Error {
public:
    using Error::Error;
};

// The optimization problem has no feasible point.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// Solver breakdown, time limit without incumbent, numerical trouble.
class SolverError : public Error {
public:
    using Error::Error;
};

} // namespace ems
