#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicons {

enum class ErrorCode {
  NoSignChange,
  MaxIterations,
  NonIntegrable,
  InvalidSpec,
  StepUnderflow,
  DomainTooSmall,
  OutOfImage,
  DegenerateMetric,
  CMCPoint,
  OutOfDomain,
  DegenerateDomain,
  InvalidC,
  InvalidCstar,
  PoleHit,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code names the violated contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bicons
