#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringlab {

enum class ErrorCode {
  InversionOfZero,
  MixedFields,
  CompositeModulus,
  ParseError,
  AmbientMismatch,
  BadShape,
  NotAssociative,
  UnitLawFails,
  NotClosed,
  NoUnit,
  DimensionMismatch,
  NotAnIdeal,
  ImproperIdeal,
  InfiniteField,
  TooLarge,
  NotNested,
  NotMaximal,
  NonIntegralConstants,
  WitnessNotCentral,
  RadicalUncertified,
  CertificateFailure,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
/// RadicalUncertified and CertificateFailure mean an internal
/// self-check did not hold; the CLI maps them to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_certificate_failure() const noexcept {
    return code_ == ErrorCode::RadicalUncertified ||
           code_ == ErrorCode::CertificateFailure;
  }

 private:
  ErrorCode code_;
};

}  // namespace ringlab
