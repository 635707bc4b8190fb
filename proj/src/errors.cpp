#include "frobenius/errors.hpp"

namespace frobenius {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadGenerator: return "BadGenerator";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::AmbiguousInput: return "AmbiguousInput";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::IrrationalElement: return "IrrationalElement";
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NonRealResult: return "NonRealResult";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded:
    case ErrorKind::DegenerateSpectrum:
    case ErrorKind::NonIntegral:
    case ErrorKind::NonRealResult:
    case ErrorKind::Overflow:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace frobenius
