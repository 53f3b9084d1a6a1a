#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clines {

/// Bad user input: malformed text, wrong arity, point off the variety, etc.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "input"; }
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }
  const char* kind() const noexcept override { return "syntax"; }

 private:
  std::size_t position_;
};

class UnknownVariableError : public InputError {
 public:
  UnknownVariableError(const std::string& name, std::size_t position)
      : InputError("unknown variable '" + name + "' at position " + std::to_string(position)),
        name_(name) {}
  const std::string& name() const noexcept { return name_; }
  const char* kind() const noexcept override { return "unknown_variable"; }

 private:
  std::string name_;
};

/// The Jacobian at the base point has the wrong rank.
class SingularPointError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "singular_point"; }
};

/// Exhaustive enumeration was requested over a field larger than the ceiling.
class FieldTooLargeError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "field_too_large"; }
};

/// A resource limit was hit. Never a mathematical answer.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant (a bug, not a user error).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace clines
