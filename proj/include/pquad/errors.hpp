#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pquad {

/// Malformed or inconsistent user input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InconsistentPresentation : public InputError {
 public:
  using InputError::InputError;
};

/// A module whose matrices break a relation of the presentation.
class RelationViolation : public InputError {
 public:
  using InputError::InputError;
};

/// Operation preconditions that the caller got wrong (B not normal, A not abelian, ...).
class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumeration would exceed the configured element or rank cap (CLI exit code 3).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven statement failed on a concrete instance; always an engine bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pquad
