#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semicat {

enum class ErrorCode {
  TagMismatch,
  NoInvolution,
  ElementOutsideCarrier,
  KeyNotMultiset,
  NotAdditive,
  NotCommutative,
  CarrierMismatch,
  MonoidMismatch,
  MonadMismatch,
  DimensionMismatch,
  IndexOutOfRange,
  MalformedTerm,
  NotAMonoidMap,
  NotASemiringMap,
  UnknownSuite,
  UnknownSemiring,
  ParseError,
  InvalidValue,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace semicat
