#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resweil {

enum class ErrorKind {
  // exactfield
  NonPrime,
  DegreeGuardExceeded,
  ZeroPolynomial,
  IncompatibleDegrees,
  // multipoly
  MixedContexts,
  StepGuardExceeded,
  MissingAssignment,
  // finalg
  NotFinite,
  ZeroRing,
  MixedFields,
  NotSquareSystem,
  EmptyBase,
  // weilres
  SearchGuardExceeded,
  NotLocalBase,
  NotCovering,
  // gammaset
  PositiveDimensionalFiber,
  NotZeroDimensional,
  MissingFiber,
  AmbientMismatch,
  // versuite
  SyntaxError,
  UndeclaredVariable,
  Io,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Whether an error is a resource guard (as opposed to bad input or a math
/// precondition violation).
bool is_resource_guard(ErrorKind kind) noexcept;

/// Whether an error is caused by malformed or unreadable input.
bool is_input_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace resweil
