#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobenius {

enum class ErrorKind {
  SpecMismatch,
  DimensionMismatch,
  ParseError,
  BadGenerator,
  ConstraintViolation,
  AmbiguousInput,
  NotASubgroup,
  NotCentral,
  NotDiagonal,
  NotAHomomorphism,
  NotUnimodular,
  IrrationalElement,
  UnsupportedSpec,
  NoWitness,
  CapExceeded,
  DegenerateSpectrum,
  NonIntegral,
  NonRealResult,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

// Validation errors are the caller's fault (bad input); computational errors
// come from caps or numerics. The CLI maps these to exit codes 1 and 2.
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace frobenius
