#include "resweil/error.hpp"

namespace resweil {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::DegreeGuardExceeded: return "DegreeGuardExceeded";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::IncompatibleDegrees: return "IncompatibleDegrees";
    case ErrorKind::MixedContexts: return "MixedContexts";
    case ErrorKind::StepGuardExceeded: return "StepGuardExceeded";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::ZeroRing: return "ZeroRing";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::NotSquareSystem: return "NotSquareSystem";
    case ErrorKind::EmptyBase: return "EmptyBase";
    case ErrorKind::SearchGuardExceeded: return "SearchGuardExceeded";
    case ErrorKind::NotLocalBase: return "NotLocalBase";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::PositiveDimensionalFiber: return "PositiveDimensionalFiber";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::MissingFiber: return "MissingFiber";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_resource_guard(ErrorKind kind) noexcept {
  return kind == ErrorKind::StepGuardExceeded || kind == ErrorKind::SearchGuardExceeded ||
         kind == ErrorKind::DegreeGuardExceeded;
}

bool is_input_error(ErrorKind kind) noexcept {
  return kind == ErrorKind::SyntaxError || kind == ErrorKind::UndeclaredVariable ||
         kind == ErrorKind::NonPrime || kind == ErrorKind::Io;
}

}  // namespace resweil
