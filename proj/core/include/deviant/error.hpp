#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace deviant {

enum class ErrorCode {
  EmptyInput,
  NonFiniteValue,
  TooFewPoints,
  DegenerateView,
  InvalidView,
  ZeroRay,
  DegenerateSigma,
  NegativeTurns,
  IndexOutOfRange,
  TooLarge,
  InvalidArgument,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `position()` carries the offending
/// element index (or input line for parse errors) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace deviant
