#include "parslit/errors.hpp"

namespace parslit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::BadSigmaZero: return "BadSigmaZero";
    case ErrorCode::Fixed2hViolated: return "Fixed2hViolated";
    case ErrorCode::NuMismatch: return "NuMismatch";
    case ErrorCode::CycleCountMismatch: return "CycleCountMismatch";
    case ErrorCode::NotStrict: return "NotStrict";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::EndStructure: return "EndStructure";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::BoundaryCircuitMismatch: return "BoundaryCircuitMismatch";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::SurfaceTypeMismatch: return "SurfaceTypeMismatch";
    case ErrorCode::Indeterminate: return "Indeterminate";
    case ErrorCode::SaddleConnection: return "SaddleConnection";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::HolonomyMismatch: return "HolonomyMismatch";
    case ErrorCode::OverlapDetected: return "OverlapDetected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::EmptyView: return "EmptyView";
    case ErrorCode::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

ErrorClass classify(ErrorCode code) {
  switch (code) {
    case ErrorCode::SaddleConnection:
    case ErrorCode::NotSimple:
    case ErrorCode::NonGeneric:
    case ErrorCode::SurfaceTypeMismatch:
    case ErrorCode::HolonomyMismatch:
    case ErrorCode::OverlapDetected:
      return ErrorClass::NonGeneric;
    case ErrorCode::InternalAssertion:
    case ErrorCode::Indeterminate:
      return ErrorClass::Internal;
    default:
      return ErrorClass::InvalidInput;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Error::Error(ErrorCode code, ErrorCode cause, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + "(" + std::string(to_string(cause)) +
                         "): " + what),
      code_(code),
      cause_(cause) {}

ErrorClass Error::error_class() const { return classify(code_); }

void internal_assert_failed(const char* expr, const char* file, int line) {
  throw Error(ErrorCode::InternalAssertion,
              std::string(expr) + " at " + file + ":" + std::to_string(line));
}

}  // namespace parslit
