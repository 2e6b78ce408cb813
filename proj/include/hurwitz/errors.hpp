#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

enum class ErrorCode {
  DivisionByZero,
  VariableMismatch,
  PoleAtAssignment,
  LogOfNonUnit,
  SingularSystem,
  InvalidPadding,
  OddSize,
  NotSkew,
  DegenerateSpectrum,
  NonCancellingPole,
  BudgetExceeded,
  ConfigError,
  ParseError,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C layer can map it onto a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hurwitz
