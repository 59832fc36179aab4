#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptorus {

enum class ErrorCode {
  InvalidTriple,
  NoHyperbolicStructure,
  NotHyperbolic,
  AxisThroughInfinity,
  NotCoprime,
  NotNeighbors,
  Overflow,
  TooFewPoints,
  Degenerate,
  EmptyBall,
  NotParabolic,
  InvalidArgument,
  Internal,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ptorus
