#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "ptorus/error.hpp"
#include "ptorus/farey.hpp"

using namespace ptorus;

namespace {

const FrickeTriple kTriple336{3, 3, 6};
const FrickeTriple kTriple34{3, 4, 6 + std::sqrt(11.0)};

// Oracle: traces of every slope with |m|+|n| <= max_word by word evaluation.
std::map<Slope, double> word_traces(const FrickeTriple& t, std::int64_t max_word) {
  const Representation rep = build_representation(t);
  std::map<Slope, double> out;
  for (const Slope& s : slopes_up_to(max_word)) {
    out[s] = std::abs(evaluate(rep, oz_word(s.m(), s.n())).trace());
  }
  return out;
}

std::map<Slope, BigInt> integer_word_traces(std::int64_t max_word) {
  const IntRepresentation rep = modular_integer_representation();
  std::map<Slope, BigInt> out;
  for (const Slope& s : slopes_up_to(max_word)) {
    out[s] = boost::multiprecision::abs(evaluate(rep, oz_word(s.m(), s.n())).trace());
  }
  return out;
}

}  // namespace

TEST_SUITE("farey") {

TEST_CASE("mediant") {
  CHECK(mediant({1, 0}, {0, 1}) == HomologyClass{1, 1});
  CHECK(mediant({1, 1}, {1, 2}) == HomologyClass{2, 3});
  CHECK_THROWS_AS(mediant({1, 0}, {1, 2}), Error);
}

TEST_CASE("Vieta flip") {
  CHECK(child_trace(3.0, 3.0, 3.0) == 6.0);
  CHECK(child_trace(6.0, 3.0, 3.0) == 15.0);
  // The flip is an involution on the opposite trace.
  CHECK(child_trace(3.0, 4.0, child_trace(3.0, 4.0, 2.5)) == doctest::Approx(2.5));
  const IntRepresentation w = modular_integer_representation();
  CHECK(evaluate(w, oz_word(2, 1)).trace() == 6);
  CHECK(evaluate(w, oz_word(3, 1)).trace() == 15);
}

TEST_CASE("quadrant2_seed") {
  CHECK(quadrant2_seed(kModularTriple) == kTriple336);
  CHECK(quadrant2_seed(kTriple336) == kModularTriple);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(2.2, 12.0);
  int tested = 0;
  while (tested < 50) {
    const double x = u(rng), y = u(rng);
    TripleRoots r;
    try {
      r = complete_triple(x, y);
    } catch (const Error&) {
      continue;
    }
    const FrickeTriple t{x, y, r.z_plus};
    const FrickeTriple q = quadrant2_seed(t);
    CHECK(std::abs(validate_triple(q.x, q.y, q.z)) <= 1e-9 * q.x * q.y * q.z);
    ++tested;
  }
}

TEST_CASE("sink triangle") {
  const auto sink = find_sink(kTriple34.x, kTriple34.y, kTriple34.z);
  std::array<double, 3> t = sink.traces;
  std::sort(t.begin(), t.end());
  CHECK(t[0] == doctest::Approx(6 - std::sqrt(11.0)));
  CHECK(t[1] == doctest::Approx(3));
  CHECK(t[2] == doctest::Approx(4));

  // (3, 6, 15) is the modular torus with another marking.
  const auto markoff = find_sink<BigInt>(3, 6, 15);
  for (const auto& v : markoff.traces) CHECK(v == 3);
}

TEST_CASE("slope_trace agrees with word evaluation") {
  for (const FrickeTriple& t : {kModularTriple, kTriple336, kTriple34}) {
    for (const auto& [slope, oracle] : word_traces(t, 12)) {
      CHECK(slope_trace(t, slope) == doctest::Approx(oracle).epsilon(1e-9));
    }
  }
}

TEST_CASE("enumerate_spectrum examples") {
  const auto l2 = enumerate_spectrum(kModularTriple, 2.0);
  REQUIRE(l2.size() == 3);
  CHECK(l2[0].slope == Slope(0, 1));
  CHECK(l2[1].slope == Slope(1, 0));
  CHECK(l2[2].slope == Slope(1, 1));
  for (const auto& e : l2) {
    CHECK(e.trace == 3.0);
    CHECK(e.length == doctest::Approx(1.9248473));
  }
  CHECK(enumerate_spectrum(kModularTriple, 1.0).empty());

  // (2,1), (1,2) and (-1,1) all have trace 6 < 2 cosh(1.8).
  const auto l36 = enumerate_spectrum(kModularTriple, 3.6);
  REQUIRE(l36.size() == 6);
  std::vector<Slope> six;
  for (const auto& e : l36) {
    if (e.trace == 6.0) six.push_back(e.slope);
  }
  CHECK(six == std::vector<Slope>{Slope(-1, 1), Slope(1, 2), Slope(2, 1)});

  CHECK(count_spectrum(kModularTriple, 2.0) == 3);
  CHECK(count_spectrum(kModularTriple, 1.0) == 0);
  CHECK(count_spectrum(kModularTriple, 3.6) == 6);
}

TEST_CASE("enumeration is complete against word evaluation") {
  // Shell rule: the oracle enumerates slopes up to word length 24 and
  // confirms nothing in the outer half of that range falls under the cutoff.
  constexpr std::int64_t kWords = 24;
  for (const FrickeTriple& t : {kModularTriple, kTriple336, kTriple34, FrickeTriple{3, 6, 15}}) {
    const double cutoff = 8.0;
    const double bound = trace_bound(cutoff);
    const auto oracle = word_traces(t, kWords);
    std::vector<Slope> expected;
    double shell_min = INFINITY;
    for (const auto& [slope, trace] : oracle) {
      if (trace <= bound) expected.push_back(slope);
      if (slope.word_length() > kWords / 2) shell_min = std::min(shell_min, trace);
    }
    REQUIRE(shell_min > bound);

    std::vector<Slope> got;
    for (const auto& e : enumerate_spectrum(t, cutoff)) {
      got.push_back(e.slope);
      CHECK(e.trace == doctest::Approx(oracle.at(e.slope)).epsilon(1e-9));
    }
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    CHECK(count_spectrum(t, cutoff) == expected.size());
  }
}

TEST_CASE("exact modular spectrum") {
  const auto l4 = exact_markoff_spectrum(4.0);
  std::vector<BigInt> traces;
  for (const auto& e : l4) traces.push_back(e.trace);
  CHECK(traces == std::vector<BigInt>{3, 3, 3, 6, 6, 6});

  const auto oracle = integer_word_traces(20);
  const auto l10 = exact_markoff_spectrum(10.0);
  for (const auto& e : l10) {
    CHECK(e.trace % 3 == 0);
    CHECK(e.trace == oracle.at(e.slope));
  }

  // A long cutoff still gives exact integer traces and multiples of 3.
  const auto l40 = exact_markoff_spectrum(40.0);
  CHECK(l40.size() > 300);
  for (const auto& e : l40) CHECK(e.trace % 3 == 0);
  CHECK(exact_markoff_spectrum(40.0, {4}).size() == l40.size());
}

TEST_CASE("exact and float modes agree") {
  const auto exact = exact_spectrum(3, 3, 6, 14.0);
  const auto approx = enumerate_spectrum(kTriple336, 14.0);
  REQUIRE(exact.size() == approx.size());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    CHECK(exact[i].slope == approx[i].slope);
    CHECK(exact[i].trace.convert_to<double>() == doctest::Approx(approx[i].trace).epsilon(1e-12));
  }
  CHECK_THROWS_AS(exact_spectrum(3, 3, 4, 5.0), Error);
}

TEST_CASE("parallel enumeration is deterministic") {
  const auto serial = enumerate_spectrum(kTriple34, 18.0);
  for (unsigned p : {2u, 3u, 8u}) {
    const auto par = enumerate_spectrum(kTriple34, 18.0, {p});
    REQUIRE(par.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(par[i].slope == serial[i].slope);
      CHECK(par[i].trace == serial[i].trace);
    }
    CHECK(count_spectrum(kTriple34, 18.0, {p}) == serial.size());
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(enumerate_spectrum({3, 3, 4}, 5.0), Error);
  try {
    enumerate_spectrum(kModularTriple, 5000.0);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
  try {
    count_spectrum(kModularTriple, -1.0);
    FAIL("expected invalid argument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("enumerate_by_word_length") {
  const auto all = enumerate_by_word_length(kModularTriple, 12);
  CHECK(all.size() == slopes_up_to(12).size());
  const auto oracle = word_traces(kModularTriple, 12);
  for (const auto& e : all) CHECK(e.trace == doctest::Approx(oracle.at(e.slope)));
  CHECK(enumerate_by_word_length(kModularTriple, 0).empty());
}

}  // TEST_SUITE
