#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sanecol {

/// Caller handed in something outside an operation's contract (k < 2,
/// improper input coloring, empty clause, ...).
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Coloring and graph disagree on the vertex set.
class DomainError : public ArgumentError {
public:
  using ArgumentError::ArgumentError;
};

/// Gadget attached with repeated or missing boundary vertices.
class ConstructionError : public ArgumentError {
public:
  using ArgumentError::ArgumentError;
};

/// Requested arity outside what the exhaustive oracle supports.
class RangeError : public ArgumentError {
public:
  using ArgumentError::ArgumentError;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A state that a correct construction can never reach.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Boundary coloring has no proper extension into a gadget's internals.
class ExtensionError : public InvariantViolation {
public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace sanecol
