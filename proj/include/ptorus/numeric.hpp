#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace ptorus {

using BigInt = boost::multiprecision::cpp_int;

// Variable-precision binary float (MPFR). Precision is taken from the
// thread's default at construction; use ScopedPrecision to set it.
using HighFloat = boost::multiprecision::mpfr_float;

/// Sets the default HighFloat precision (decimal digits) for the current
/// scope and restores the previous value on exit.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

// Digits needed to resolve differences of order 1/(t1*t2) between quantities
// of order log(t), where t is bounded by 10^max_log10_trace.
unsigned digits_for_traces(double max_log10_trace);

// Number of decimal digits in |v|.
std::size_t decimal_digits(const BigInt& v);

// printf("%.10g") formatting used for every floating column we emit.
std::string format_sig10(double v);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace ptorus
