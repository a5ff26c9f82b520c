#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace closedpoly {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain: constant polynomial where a
/// non-constant one is required, mismatched variable counts, bad indices.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured cardinality cap.
class CapacityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A result failed its own exact verification. Indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace closedpoly
