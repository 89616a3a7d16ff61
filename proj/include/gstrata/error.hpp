#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gstrata {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  InvalidConfiguration,
  MixedAmbient,
  MixedField,
  RankDeficient,
  ShapeMismatch,
  NotInChart,
  NoCommonComplement,
  EmptyStratum,
  RankTooLarge,
  BudgetExceeded,
  InsufficientPoints,
  NonPolynomialFit,
  NotEnoughSubspaces,
  MaxAttemptsExceeded,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gstrata
