#include "salemforge/error.hpp"

namespace salemforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZERO_POLYNOMIAL";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::InexactDivision: return "INEXACT_DIVISION";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::NotMonic: return "NOT_MONIC";
    case ErrorCode::NotSimple: return "NOT_SIMPLE";
    case ErrorCode::DegenerateCensus: return "DEGENERATE_CENSUS";
    case ErrorCode::NotTransformable: return "NOT_TRANSFORMABLE";
    case ErrorCode::NotInterlacing: return "NOT_INTERLACING";
    case ErrorCode::UnsupportedSum: return "UNSUPPORTED_SUM";
    case ErrorCode::NotCC: return "NOT_CC";
    case ErrorCode::NotCS: return "NOT_CS";
    case ErrorCode::NotSS: return "NOT_SS";
    case ErrorCode::NotCSOrSS: return "NOT_CS_OR_SS";
    case ErrorCode::ConditionAtOneFails: return "CONDITION_AT_ONE_FAILS";
    case ErrorCode::EmptySpec: return "EMPTY_SPEC";
    case ErrorCode::InvalidSpec: return "INVALID_SPEC";
    case ErrorCode::UnexpectedCensus: return "UNEXPECTED_CENSUS";
    case ErrorCode::NotPisot: return "NOT_PISOT";
    case ErrorCode::NotSalem: return "NOT_SALEM";
    case ErrorCode::RoundTripMismatch: return "ROUND_TRIP_MISMATCH";
    case ErrorCode::BoydIdentityFails: return "BOYD_IDENTITY_FAILS";
    case ErrorCode::ClassifyNone: return "CLASSIFY_NONE";
    case ErrorCode::TauNotSmall: return "TAU_NOT_SMALL";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

bool is_precondition_failure(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateCensus:
    case ErrorCode::UnexpectedCensus:
    case ErrorCode::RoundTripMismatch:
    case ErrorCode::BoydIdentityFails:
    case ErrorCode::ClassifyNone:
    case ErrorCode::Internal:
      return false;
    default:
      return true;
  }
}

}  // namespace salemforge
