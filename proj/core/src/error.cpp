#include "deviant/error.hpp"

namespace deviant {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::DegenerateView: return "DegenerateView";
    case ErrorCode::InvalidView: return "InvalidView";
    case ErrorCode::ZeroRay: return "ZeroRay";
    case ErrorCode::DegenerateSigma: return "DegenerateSigma";
    case ErrorCode::NegativeTurns: return "NegativeTurns";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      position_(position) {}

}  // namespace deviant
