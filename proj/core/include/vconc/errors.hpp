#pragma once

#include <stdexcept>
#include <string>

namespace vconc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A size or iteration cap was exceeded (dimension 64, degree 64, ...).
class ComputationLimit : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Operator restriction to a subspace that the operator does not preserve.
class NotInvariant : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

/// The conditions a Seifert couple or directed matrix can violate.
enum class Condition {
  kNotSquare,
  kDimensionMismatch,
  kOddDimension,
  kNonIntegral,
  kSkewSymmetry,
  kDeterminant,
  kSymmetrization,
  kAdmissibility,
  kIsometry,
  kDiagram,
};

std::string to_string(Condition c);

class ValidationError : public Error {
 public:
  ValidationError(Condition condition, const std::string& what)
      : Error(to_string(condition) + ": " + what), condition_(condition) {}

  Condition condition() const noexcept { return condition_; }

 private:
  Condition condition_;
};

/// Parse failure with a 1-based character offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace vconc
