#pragma once

#include <stdexcept>
#include <string>

namespace evoternary {

/// Malformed textual input: element strings, JSON documents, CLI file contents.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A type invariant or parameter constraint does not hold (non-prime modulus,
/// dimension mismatch, excluded parameter value, ...).
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZeroError : public InvariantError {
public:
    DivisionByZeroError() : InvariantError("division by zero") {}
};

/// Operands live in different fields.
class FieldMismatchError : public InvariantError {
public:
    FieldMismatchError() : InvariantError("field mismatch between operands") {}
};

/// A configured size bound was exceeded (oracle dimension, enumeration size).
class BoundExceededError : public std::runtime_error {
public:
    explicit BoundExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// The operation is only defined for perfect algebras (invertible structure matrix).
class PerfectRequiredError : public std::runtime_error {
public:
    explicit PerfectRequiredError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace evoternary
