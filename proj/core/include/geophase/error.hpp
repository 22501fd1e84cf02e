#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geophase {

enum class ErrorKind {
  kDomain,
  kDimension,
  kInput,
  kValidation,
  kOrthogonalLink,
  kOrthogonalEndpoints,
  kOpenPath,
  kDegenerateArc,
  kAdiabaticity,
  kDegeneracy,
  kGauge,
  kStepTooLarge,
  kSingularity,
  kDegeneracyCollapse,
  kResolution,
  kUndefinedPhase,
  kSynthesis,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so
/// front-ends can map it onto exit codes and error records.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace geophase
