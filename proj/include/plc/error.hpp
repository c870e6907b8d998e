#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plc {

enum class ErrorCode {
  PreconditionViolation,
  CoincidentPoints,
  CoincidentLines,
  LineAtInfinity,
  DegenerateHomography,
  DegenerateProjection,
  FrontoParallel,
  DegeneratePL,
  InfiniteVanishingPoint,
  DegenerateDenominator,
  DegenerateConfiguration,
  DegenerateLines,
  InsufficientViews,
  BehindCamera,
  GuardRejected,
  InvalidInput,
};

// Stable name used in CLI diagnostics and JSON.
std::string_view error_name(ErrorCode code) noexcept;

// All domain failures raised by the library. The code identifies the
// degeneracy class; what() carries "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] std::string_view name() const noexcept { return error_name(code_); }
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace plc
