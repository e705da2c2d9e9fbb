#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace solvmetry {

enum class ErrorKind {
  // input errors
  DimensionMismatch,
  InvalidInput,
  ParseError,
  ValidationFailed,
  UnknownCatalogEntry,
  // domain errors
  NotSolvable,
  DegenerateTolerance,
  SnapFailure,
  LpFailure,
  SelectionAmbiguous,
  FixedPointFailure,
  NoExtension,
  AmbiguousExtension,
  PreconditionFailed,
  // an exact self-check failed; indicates a bug or corrupted input
  InternalCheck,
};

std::string_view to_string(ErrorKind kind);

/// True for kinds caused by malformed input rather than by the mathematics.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace solvmetry
