#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "ptorus/counting.hpp"
#include "ptorus/error.hpp"

using namespace ptorus;

namespace {

std::uint64_t gcd_loop(std::int64_t max_sum) {
  std::uint64_t n = 0;
  for (std::int64_t m = 1; m < max_sum; ++m) {
    for (std::int64_t k = 1; m + k <= max_sum; ++k) {
      if (std::gcd(m, k) == 1) ++n;
    }
  }
  return n;
}

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("count_simple_geodesics") {
  CHECK(count_simple_geodesics(kModularTriple, 2.0) == 3);
  CHECK(count_simple_geodesics(kModularTriple, 1.0) == 0);
  CHECK(count_simple_geodesics(kModularTriple, 3.6) == 6);
}

TEST_CASE("count_series conventions") {
  const std::vector<double> ls{3.6, 2.0, 1.0};
  const auto un = count_series(kModularTriple, ls, Convention::unoriented);
  REQUIRE(un.entries.size() == 3);
  CHECK(un.entries[0].length == 1.0);
  CHECK(un.entries[0].count == 0);
  CHECK(un.entries[1].count == 3);
  CHECK(un.entries[2].count == 6);
  const auto or_ = count_series(kModularTriple, ls, Convention::oriented);
  CHECK(or_.entries[2].count == 12);
  CHECK(parse_convention("oriented") == Convention::oriented);
  CHECK(convention_name(Convention::unoriented) == "unoriented");
  CHECK_THROWS_AS(parse_convention("both"), Error);
}

TEST_CASE("primitive pair counts") {
  CHECK(primitive_pairs_count(2) == 1);
  CHECK(primitive_pairs_count(5) == 9);
  CHECK(totient_sum(5) == 9);
  CHECK(primitive_pairs_count(1) == 0);
  const auto phi = totient_table(12);
  CHECK(phi[1] == 1);
  CHECK(phi[9] == 6);
  CHECK(phi[12] == 4);
  for (std::int64_t l : {3, 10, 97, 360, 1000}) {
    const auto brute = gcd_loop(l);
    CHECK(totient_sum(l) == brute);
    CHECK(primitive_pairs_count(l) == brute);
  }
}

TEST_CASE("asymptotic_prediction") {
  CHECK(asymptotic_prediction(1.0) == doctest::Approx(0.30396355).epsilon(1e-8));
  CHECK(asymptotic_prediction(10.0) == doctest::Approx(30.396355).epsilon(1e-8));
  CHECK(asymptotic_prediction(14.0) == 4 * asymptotic_prediction(7.0));
  const double ratio = static_cast<double>(primitive_pairs_count(10000)) / asymptotic_prediction(10000);
  CHECK(std::abs(ratio - 1) <= 0.01);
}

TEST_CASE("fit_quadratic_coefficient") {
  CountSeries exact;
  for (double l : {10.0, 20.0, 30.0}) {
    exact.entries.push_back({l, static_cast<std::uint64_t>(std::llround(asymptotic_prediction(l) * 1e6))});
  }
  const auto fit = fit_quadratic_coefficient(exact);
  CHECK(fit.c / 1e6 == doctest::Approx(3 / (std::numbers::pi * std::numbers::pi)).epsilon(1e-9));
  for (double r : fit.ratios) CHECK(r == doctest::Approx(fit.c).epsilon(1e-7));

  CountSeries one;
  one.entries.push_back({10.0, 30});
  try {
    fit_quadratic_coefficient(one);
    FAIL("expected TooFewPoints");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooFewPoints);
  }
}

TEST_CASE("modular counting regression") {
  const std::vector<double> ls{10, 15, 20, 25};
  const auto series = count_series(kModularTriple, ls, Convention::unoriented);
  std::vector<std::uint64_t> counts;
  for (const auto& p : series.entries) counts.push_back(p.count);
  CHECK(counts == std::vector<std::uint64_t>{30, 60, 108, 174});
  const auto fit = fit_quadratic_coefficient(series);
  const double a = fit.ratios[2], b = fit.ratios[3];
  CHECK(std::abs(b - a) / b < 0.15);
}

TEST_CASE("word_geodesic_ratio_report") {
  const auto r = word_geodesic_ratio_report(kModularTriple, 2);
  CHECK(r.max_ratio == doctest::Approx(1.9248473));
  CHECK(r.min_ratio == doctest::Approx(1.9248473 / 2));
  CHECK(r.argmin == Slope(1, 1));

  const FrickeTriple t{3, 4, 6 + std::sqrt(11.0)};
  const auto r2 = word_geodesic_ratio_report(t, 30);
  CHECK(r2.min_ratio > 0);
  CHECK(r2.max_ratio >= r2.min_ratio);
  CHECK_THROWS_AS(word_geodesic_ratio_report(t, 0), Error);
}

}  // TEST_SUITE
