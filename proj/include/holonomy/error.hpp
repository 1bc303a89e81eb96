#pragma once

#include <stdexcept>
#include <string>

namespace holonomy {

enum class ErrorCode {
  InvalidArgument,
  NotHermitian,
  NotUnitary,
  NotAProjector,
  NotNormalized,
  DegenerateSpectrum,
  DegeneratePoint,
  PunctureHit,
  PunctureOnPath,
  OriginExcluded,
  SizeMismatch,
  TooLarge,
  AmbiguousMatch,
  EndpointMismatch,
  NotClosed,
  DegeneracyOnPath,
  DepthExceeded,
  NonAbelianGenerators,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotAProjector: return "NotAProjector";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::PunctureHit: return "PunctureHit";
    case ErrorCode::PunctureOnPath: return "PunctureOnPath";
    case ErrorCode::OriginExcluded: return "OriginExcluded";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::DegeneracyOnPath: return "DegeneracyOnPath";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::NonAbelianGenerators: return "NonAbelianGenerators";
  }
  return "UnknownError";
}

/// Typed error carrying a machine-checkable code; the CLI maps code
/// categories onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace holonomy
