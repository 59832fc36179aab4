#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ptorus/farey.hpp"
#include "ptorus/sl2.hpp"

namespace ptorus {

/// Unoriented counts one geodesic per slope; oriented counts both
/// orientations, i.e. twice as many.
enum class Convention { unoriented, oriented };

std::string_view convention_name(Convention c);
Convention parse_convention(std::string_view name);

struct CountPoint {
  double length = 0.0;
  std::uint64_t count = 0;
};

/// N(L) samples. Lengths strictly increasing, counts nondecreasing.
struct CountSeries {
  std::vector<CountPoint> entries;
  Convention convention = Convention::unoriented;
};

/// Number of unoriented simple closed geodesics of length <= max_length.
std::uint64_t count_simple_geodesics(const FrickeTriple& triple, double max_length,
                                     const EnumerateOptions& options = {});

/// N at each length (sorted and deduplicated first).
CountSeries count_series(const FrickeTriple& triple, std::span<const double> lengths,
                         Convention convention = Convention::unoriented,
                         const EnumerateOptions& options = {});

/// phi(0..n) by a linear sieve.
std::vector<std::uint32_t> totient_table(std::uint32_t n);

/// sum_{s=2}^{max_sum} phi(s).
std::uint64_t totient_sum(std::int64_t max_sum);

/// |{(m, n) : m, n >= 1, m + n <= max_sum, gcd(m, n) = 1}|, computed by
/// Moebius inversion over T(k) = k(k-1)/2.
std::uint64_t primitive_pairs_count(std::int64_t max_sum);

/// 3 L^2 / pi^2 = L^2 / (2 zeta(2)).
double asymptotic_prediction(double length);

struct QuadraticFit {
  double c = 0.0;
  std::vector<double> ratios;  // N / L^2 per point
};

/// c = N(L_max) / L_max^2, with N/L^2 at every point for inspection.
/// Throws TooFewPoints for fewer than three entries.
QuadraticFit fit_quadratic_coefficient(const CountSeries& series);

struct RatioReport {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  Slope argmin;
  Slope argmax;
};

/// Extremes of length(m, n) / (|m| + |n|) over canonical slopes with
/// |m| + |n| <= max_word_length.
RatioReport word_geodesic_ratio_report(const FrickeTriple& triple, std::int64_t max_word_length);

}  // namespace ptorus
