#ifndef PARSLIT_ERRORS_HPP
#define PARSLIT_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parslit {

enum class ErrorCode {
  // slit-core
  Malformed,
  BadSigmaZero,
  Fixed2hViolated,
  NuMismatch,
  CycleCountMismatch,
  NotStrict,
  // flat-surface
  InvalidGrid,
  EndStructure,
  NonIntegralGenus,
  BoundaryCircuitMismatch,
  NotClosed,
  SurfaceTypeMismatch,
  Indeterminate,
  // uniformizer
  SaddleConnection,
  NotSimple,
  NonGeneric,
  HolonomyMismatch,
  OverlapDetected,
  // census
  TooLarge,
  // documents and rendering
  ParseError,
  InvariantViolation,
  EmptyView,
  InternalAssertion,
};

/// Coarse classification used for CLI exit codes.
enum class ErrorClass { InvalidInput, NonGeneric, Internal };

std::string_view to_string(ErrorCode code);
ErrorClass classify(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  Error(ErrorCode code, ErrorCode cause, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  /// For wrapper errors (InvariantViolation, NonGeneric) the underlying reason.
  std::optional<ErrorCode> cause() const noexcept { return cause_; }

  ErrorClass error_class() const;

 private:
  ErrorCode code_;
  std::optional<ErrorCode> cause_;
};

[[noreturn]] void internal_assert_failed(const char* expr, const char* file, int line);

}  // namespace parslit

#define PARSLIT_ASSERT(expr) \
  ((expr) ? (void)0 : ::parslit::internal_assert_failed(#expr, __FILE__, __LINE__))

#endif  // PARSLIT_ERRORS_HPP
