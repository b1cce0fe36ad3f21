// error.hpp — exception types raised by the transmon library.

#pragma once

#include <stdexcept>
#include <string>

namespace transmon {

/// Root of every error the library raises. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violated a documented bound (exit code 2).
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& what)
        : Error(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class NonFiniteParameter : public ValidationError {
public:
    explicit NonFiniteParameter(const std::string& field)
        : ValidationError(field, "must be finite") {}
};

/// Config text is not well-formed JSON.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Numerical failure (exit code 3).
class SolverFailure : public Error {
public:
    using Error::Error;
};

class NoConvergence : public SolverFailure {
public:
    NoConvergence(double previous_e01, double last_e01, int last_ncut)
        : SolverFailure("E01 did not converge in ncut (last ncut " + std::to_string(last_ncut) +
                        ", E01 " + std::to_string(previous_e01) + " -> " +
                        std::to_string(last_e01) + " GHz)"),
          previous_(previous_e01), last_(last_e01) {}

    double previous_e01() const noexcept { return previous_; }
    double last_e01() const noexcept { return last_; }

private:
    double previous_;
    double last_;
};

class StepUnderflow : public SolverFailure {
public:
    using SolverFailure::SolverFailure;
};

/// Hellmann–Feynman is ill-defined when levels 0 and 1 coincide.
class DegeneratePair : public SolverFailure {
public:
    using SolverFailure::SolverFailure;
};

class UnboundedReference : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

class EmptySeries : public Error {
public:
    using Error::Error;
};

/// File system or stream failure (exit code 4).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace transmon
