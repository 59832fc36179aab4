#include "ptorus/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ptorus/error.hpp"

namespace ptorus {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidTriple: return "InvalidTriple";
    case ErrorCode::NoHyperbolicStructure: return "NoHyperbolicStructure";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::AxisThroughInfinity: return "AxisThroughInfinity";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotNeighbors: return "NotNeighbors";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::EmptyBall: return "EmptyBall";
    case ErrorCode::NotParabolic: return "NotParabolic";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

ScopedPrecision::ScopedPrecision(unsigned digits) : saved_(HighFloat::default_precision()) {
  HighFloat::default_precision(digits);
}

ScopedPrecision::~ScopedPrecision() { HighFloat::default_precision(saved_); }

unsigned digits_for_traces(double max_log10_trace) {
  const double d = 2.0 * std::max(0.0, max_log10_trace) + 60.0;
  return static_cast<unsigned>(std::ceil(d));
}

std::size_t decimal_digits(const BigInt& v) {
  if (v == 0) return 1;
  // floor(log10 |v|) + 1, up to one digit of slack from the bit length.
  const auto bits = boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
  return static_cast<std::size_t>(std::ceil(static_cast<double>(bits) * 0.30102999566398120));
}

std::string format_sig10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace ptorus
