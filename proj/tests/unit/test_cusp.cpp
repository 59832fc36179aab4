#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ptorus/cusp.hpp"
#include "ptorus/error.hpp"

using namespace ptorus;

TEST_SUITE("cusp") {

TEST_CASE("normalize_cusp sends the cusp to infinity with unit translation") {
  for (const FrickeTriple& t : {kModularTriple, FrickeTriple{3, 3, 6}, FrickeTriple{3, 4, 6 + std::sqrt(11.0)}}) {
    const Representation rep = build_representation(t);
    const NormalizedRep n = normalize_cusp(rep);
    const Mat2 k = n.cusp_generator;
    const double sign = k.a > 0 ? 1.0 : -1.0;
    CHECK(sign * k.a == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sign * k.b == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(k.c) < 1e-9);
    CHECK(sign * k.d == doctest::Approx(1.0).epsilon(1e-9));

    for (const Slope& s : slopes_up_to(6)) {
      const Word w = oz_word(s.m(), s.n());
      CHECK(evaluate(n.rep, w).trace() == doctest::Approx(evaluate(rep, w).trace()).epsilon(1e-9));
    }
  }
}

TEST_CASE("normalize_cusp rejects a non-parabolic commutator") {
  // (3, 3, z) with tr[A,B] = x^2 + y^2 + z^2 - xyz - 2 = -2.5.
  const double x = 3, y = 3, z = (9 + std::sqrt(7.0)) / 2;
  const double p = (y + std::sqrt(y * y - 4)) / 2;
  Representation rep;
  rep.a = Mat2{x, 1, -1, 0};
  rep.b = Mat2{p, 0, z - x * p, 1 / p};
  rep.triple = {x, y, z};
  REQUIRE(commutator(rep.a, rep.b).trace() == doctest::Approx(-2.5));
  try {
    normalize_cusp(rep);
    FAIL("expected NotParabolic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotParabolic);
  }
}

TEST_CASE("lift_height") {
  CHECK(lift_height(Mat2{2, 0, 1.5, 0.5}) == doctest::Approx(0.5));
  CHECK(lift_height(Mat2{0, 1, -1, 3}) == doctest::Approx(std::sqrt(5.0) / 2));
  CHECK_THROWS_AS(lift_height(Mat2{2, 0, 0, 0.5}), Error);
}

TEST_CASE("verify_cusp_avoidance") {
  for (const FrickeTriple& t : {kModularTriple, FrickeTriple{3, 3, 6}}) {
    const auto reports = verify_cusp_avoidance(t, 6, 6);
    CHECK(reports.size() == slopes_up_to(6).size());
    for (const auto& r : reports) {
      CHECK(r.max_height > 0);
      CHECK(r.max_height < kCuspHeightBound);
      CHECK(r.conj_depth == 6);
    }
  }
}

TEST_CASE("more conjugates never lower the maximum") {
  std::vector<LiftReport> previous;
  for (int depth = 0; depth <= 5; ++depth) {
    const auto reports = verify_cusp_avoidance(kModularTriple, 5, depth);
    if (!previous.empty()) {
      for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].slope == previous[i].slope);
        CHECK(reports[i].max_height >= previous[i].max_height);
        CHECK(reports[i].lifts_examined >= previous[i].lifts_examined);
      }
    }
    previous = reports;
  }
}

TEST_CASE("parallel cusp scan matches serial") {
  const auto serial = verify_cusp_avoidance(kModularTriple, 6, 4, 1);
  const auto par = verify_cusp_avoidance(kModularTriple, 6, 4, 3);
  REQUIRE(serial.size() == par.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].slope == par[i].slope);
    CHECK(serial[i].max_height == par[i].max_height);
  }
  CHECK_THROWS_AS(verify_cusp_avoidance(kModularTriple, 0, 4), Error);
  CHECK_THROWS_AS(verify_cusp_avoidance(kModularTriple, 4, -1), Error);
}

TEST_CASE("csv report") {
  std::ostringstream out;
  write_cusp_csv(out, verify_cusp_avoidance(kModularTriple, 1, 0));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "slope_m,slope_n,max_height,conj_depth");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2);
}

}  // TEST_SUITE
