#include "gr/error.hpp"

#include <utility>

namespace gr {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NonInjectiveMap: return "NonInjectiveMap";
    case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InconsistentHeader: return "InconsistentHeader";
    case ErrorCode::UnknownPattern: return "UnknownPattern";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::RainbowTriangle: return "RainbowTriangle";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::EqualColors: return "EqualColors";
    case ErrorCode::NoFixtureAndSearchFailed: return "NoFixtureAndSearchFailed";
    case ErrorCode::UnsupportedKipas: return "UnsupportedKipas";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::UnsupportedTarget: return "UnsupportedTarget";
    case ErrorCode::MissingR2: return "MissingR2";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ScopeExceeded: return "ScopeExceeded";
    case ErrorCode::NotExactlyOne: return "NotExactlyOne";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<int> detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace gr
