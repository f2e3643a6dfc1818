#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace salemforge {

/// Failure categories surfaced by the library. Precondition failures are
/// distinguished from internal faults so that front ends can map them to
/// different exit statuses.
enum class ErrorCode {
  // arithmetic
  ZeroPolynomial,
  DivisionByZero,
  InexactDivision,
  InvalidArgument,
  ParseError,
  // classification and root location
  NotMonic,
  NotSimple,
  DegenerateCensus,
  NotTransformable,
  NotInterlacing,
  UnsupportedSum,
  // constructions
  NotCC,
  NotCS,
  NotSS,
  NotCSOrSS,
  ConditionAtOneFails,
  EmptySpec,
  InvalidSpec,
  UnexpectedCensus,
  // sequences
  NotPisot,
  NotSalem,
  RoundTripMismatch,
  BoydIdentityFails,
  ClassifyNone,
  TauNotSmall,
  // anything that signals a bug rather than bad input
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that describe a violated hypothesis of the caller's input.
bool is_precondition_failure(ErrorCode code) noexcept;

class SalemError : public std::runtime_error {
 public:
  SalemError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw SalemError(code, what);
}

}  // namespace salemforge
