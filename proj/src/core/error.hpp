#pragma once

#include <stdexcept>
#include <string>

namespace onsat {

enum class ErrorCode {
  UndeclaredVariable,
  TooManyVariables,
  ConflictingAssignment,
  DuplicateVariable,
  InvalidOnSet,
  RatioUnavailable,
  BaseMismatch,
  ArityMismatch,
  VariableAbsent,
  NoPureLiterals,
  ParseError,
  HeaderMismatch,
  DivisionByZero,
  NotQuadratic,
  InvalidArgument,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace onsat
