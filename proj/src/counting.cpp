#include "ptorus/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ptorus/error.hpp"

namespace ptorus {

std::string_view convention_name(Convention c) {
  return c == Convention::oriented ? "oriented" : "unoriented";
}

Convention parse_convention(std::string_view name) {
  if (name == "unoriented") return Convention::unoriented;
  if (name == "oriented") return Convention::oriented;
  throw Error(ErrorCode::InvalidArgument, "unknown convention '" + std::string(name) + "'");
}

std::uint64_t count_simple_geodesics(const FrickeTriple& triple, double max_length,
                                     const EnumerateOptions& options) {
  return count_spectrum(triple, max_length, options);
}

CountSeries count_series(const FrickeTriple& triple, std::span<const double> lengths,
                         Convention convention, const EnumerateOptions& options) {
  std::vector<double> sorted(lengths.begin(), lengths.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  CountSeries series;
  series.convention = convention;
  if (sorted.empty()) return series;

  // One enumeration at the largest cutoff serves every smaller one.
  const auto spectrum = enumerate_spectrum(triple, sorted.back(), options);
  const std::uint64_t factor = convention == Convention::oriented ? 2 : 1;
  for (double length : sorted) {
    const double bound = trace_bound(length);
    auto n = std::count_if(spectrum.begin(), spectrum.end(),
                           [bound](const SpectrumEntry& e) { return std::abs(e.trace) <= bound; });
    series.entries.push_back({length, factor * static_cast<std::uint64_t>(n)});
  }
  return series;
}

std::vector<std::uint32_t> totient_table(std::uint32_t n) {
  std::vector<std::uint32_t> phi(n + 1);
  std::vector<std::uint32_t> primes;
  if (n >= 1) phi[1] = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (phi[i] == 0) {
      phi[i] = i - 1;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
      if (ip > n) break;
      if (i % p == 0) {
        phi[ip] = phi[i] * p;
        break;
      }
      phi[ip] = phi[i] * (p - 1);
    }
  }
  return phi;
}

std::uint64_t totient_sum(std::int64_t max_sum) {
  if (max_sum < 2) return 0;
  const auto phi = totient_table(static_cast<std::uint32_t>(max_sum));
  std::uint64_t total = 0;
  for (std::int64_t s = 2; s <= max_sum; ++s) total += phi[static_cast<std::size_t>(s)];
  return total;
}

std::uint64_t primitive_pairs_count(std::int64_t max_sum) {
  if (max_sum < 2) return 0;
  const auto n = static_cast<std::size_t>(max_sum);
  // Linear sieve for the Moebius function.
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  std::vector<std::size_t> primes;
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::size_t p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  // Pairs with m, n >= 1 and m + n <= k number k(k-1)/2; those with
  // d | gcd(m, n) number T(floor(max_sum / d)).
  std::int64_t total = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (mu[d] == 0) continue;
    const auto k = static_cast<std::int64_t>(n / d);
    total += mu[d] * (k * (k - 1) / 2);
  }
  return static_cast<std::uint64_t>(total);
}

double asymptotic_prediction(double length) {
  return 3.0 * length * length / (std::numbers::pi * std::numbers::pi);
}

QuadraticFit fit_quadratic_coefficient(const CountSeries& series) {
  if (series.entries.size() < 3) {
    throw Error(ErrorCode::TooFewPoints,
                "need at least 3 points, got " + std::to_string(series.entries.size()));
  }
  QuadraticFit fit;
  for (const auto& p : series.entries) {
    fit.ratios.push_back(static_cast<double>(p.count) / (p.length * p.length));
  }
  fit.c = fit.ratios.back();
  return fit;
}

RatioReport word_geodesic_ratio_report(const FrickeTriple& triple, std::int64_t max_word_length) {
  if (max_word_length < 1) {
    throw Error(ErrorCode::InvalidArgument, "word bound must be positive");
  }
  const auto entries = enumerate_by_word_length(triple, max_word_length);
  RatioReport report;
  report.min_ratio = std::numeric_limits<double>::infinity();
  report.max_ratio = 0.0;
  for (const auto& e : entries) {
    const double r = e.length / static_cast<double>(e.slope.word_length());
    if (r < report.min_ratio) {
      report.min_ratio = r;
      report.argmin = e.slope;
    }
    if (r > report.max_ratio) {
      report.max_ratio = r;
      report.argmax = e.slope;
    }
  }
  return report;
}

}  // namespace ptorus
