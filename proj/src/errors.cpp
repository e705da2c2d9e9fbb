#include "solvmetry/errors.hpp"

namespace solvmetry {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::DegenerateTolerance: return "DegenerateTolerance";
    case ErrorKind::SnapFailure: return "SnapFailure";
    case ErrorKind::LpFailure: return "LpFailure";
    case ErrorKind::SelectionAmbiguous: return "SelectionAmbiguous";
    case ErrorKind::FixedPointFailure: return "FixedPointFailure";
    case ErrorKind::NoExtension: return "NoExtension";
    case ErrorKind::AmbiguousExtension: return "AmbiguousExtension";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InternalCheck: return "InternalCheck";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch:
    case ErrorKind::InvalidInput:
    case ErrorKind::ParseError:
    case ErrorKind::ValidationFailed:
    case ErrorKind::UnknownCatalogEntry:
      return true;
    default:
      return false;
  }
}

}  // namespace solvmetry
