#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace memsim {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a device law.
class DomainError : public Error {
public:
    using Error::Error;
};

// Caller violated an operation's usage contract (empty input, bad flag combination).
class UsageError : public Error {
public:
    using Error::Error;
};

// Malformed circuit topology: unknown node, conflicting clamps, repeated terminals.
class StructuralError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
          line_(line),
          column_(column),
          detail_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

// Non-finite value encountered while evaluating the dynamics.
class NumericalError : public Error {
public:
    NumericalError(double t, const std::string& message)
        : Error(message), time_(t) {}

    double time() const noexcept { return time_; }

private:
    double time_;
};

// The step controller could not satisfy the tolerances above dt_min.
class StiffnessError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Final voltages are not close enough to a logic level to be read out.
class NotConverged : public Error {
public:
    using Error::Error;
};

}  // namespace memsim
