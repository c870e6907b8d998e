#include "plc/error.hpp"

namespace plc {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::LineAtInfinity: return "LineAtInfinity";
    case ErrorCode::DegenerateHomography: return "DegenerateHomography";
    case ErrorCode::DegenerateProjection: return "DegenerateProjection";
    case ErrorCode::FrontoParallel: return "FrontoParallel";
    case ErrorCode::DegeneratePL: return "DegeneratePL";
    case ErrorCode::InfiniteVanishingPoint: return "InfiniteVanishingPoint";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::DegenerateLines: return "DegenerateLines";
    case ErrorCode::InsufficientViews: return "InsufficientViews";
    case ErrorCode::BehindCamera: return "BehindCamera";
    case ErrorCode::GuardRejected: return "GuardRejected";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace plc
