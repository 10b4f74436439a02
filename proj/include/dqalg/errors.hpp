#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dq {

/// Stable error codes. The CLI prints `to_string(code)` verbatim, so the
/// spelling of these names is part of the external interface.
enum class ErrorCode {
  Singular,
  DimensionMismatch,
  NotInAlgebra,
  UnsupportedCharacteristic,
  BudgetExceeded,
  NotNilpotent,
  NotAnIdeal,
  ZeroIdeal,
  InadmissibleId,
  ShapeMismatch,
  InvalidQ,
  InvalidInput,
  NotBlockTypeMaxDim,
  NotCanonical,
  ClosureViolation,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the leading code name.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace dq
