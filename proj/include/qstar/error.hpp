#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qstar {

enum class ErrorCode {
  DivisorNearZero,
  InnerNotVanishing,
  OrderMismatch,
  InvalidParams,
  OutOfRange,
  DegenerateDivisor,
  InvalidSchwarz,
  DenominatorVanished,
  IndexOutOfRange,
  UnknownId,
  MissingCaseFlag,
  PreconditionViolated,
  UnknownFunctional,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `index()` carries the offending
/// coefficient index for DegenerateDivisor and similar per-n failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<int> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<int> index_;
};

}  // namespace qstar
