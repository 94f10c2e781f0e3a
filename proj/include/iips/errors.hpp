#pragma once

#include <stdexcept>
#include <string>

namespace iips {

// Operand shapes are incompatible with the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A square matrix that was required to be invertible is not.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed matrix / weight / record input. The message names the field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WeightError : public std::invalid_argument {
 public:
  enum class Kind { NotHermitian, Singular, NotSquare };

  WeightError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// A hypothesis of a rank identity or theorem is not satisfied by the operands.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A required indefinite Moore-Penrose inverse does not exist.
class NotExistsError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Something that is mathematically impossible happened; always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace iips
