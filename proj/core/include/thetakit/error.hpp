#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace thetakit {

enum class ErrorCode {
  // input errors
  SyntaxError,
  UnknownIdentifier,
  UnknownBuiltin,
  InvalidArgument,
  // numeric failures
  DomainError,
  DepthExceeded,
  OutOfRange,
  OutOfDomain,
  OutOfSegment,
  SingularPoint,
  EverywhereFlat,
  StepTooLarge,
  VanishingCurvature,
  AxisContact,
  EmptyInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every exception thrown by the library. The code identifies the
/// failure class; the message is human readable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures caused by malformed input text rather than numerics.
  bool is_input_error() const noexcept {
    return code_ == ErrorCode::SyntaxError || code_ == ErrorCode::UnknownIdentifier ||
           code_ == ErrorCode::UnknownBuiltin || code_ == ErrorCode::InvalidArgument;
  }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& expected)
      : Error(ErrorCode::SyntaxError,
              "at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Raised when a requested value lies outside an attainable interval; carries
/// that interval.
class RangeError : public Error {
 public:
  RangeError(ErrorCode code, double value, double lo, double hi, const std::string& what)
      : Error(code, what + " " + std::to_string(value) + " outside [" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "]"),
        lo_(lo),
        hi_(hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::OutOfSegment: return "OutOfSegment";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::EverywhereFlat: return "EverywhereFlat";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::VanishingCurvature: return "VanishingCurvature";
    case ErrorCode::AxisContact: return "AxisContact";
    case ErrorCode::EmptyInput: return "EmptyInput";
  }
  return "Error";
}

}  // namespace thetakit
