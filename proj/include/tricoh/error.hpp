#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tricoh {

enum class ErrorCode {
  ZeroNorm,
  NotNormalized,
  InvalidParameters,
  NotUnitary,
  NumericalDomain,
  OutOfRange,
  DegenerateBranch,
  UnknownRecipe,
  EmptyCounts,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception type thrown by every tricoh operation. The code is stable and
/// is what the CLI maps onto exit statuses.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace tricoh
