#include "ptorus/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "ptorus/counting.hpp"
#include "ptorus/cusp.hpp"
#include "ptorus/error.hpp"
#include "ptorus/norm.hpp"
#include "ptorus/words.hpp"

namespace ptorus {
namespace {

constexpr std::int64_t kOracleWordBound = 12;
constexpr double kOracleTolerance = 1e-9;
constexpr std::int64_t kTotientBound = 1000;
constexpr std::int64_t kAsymptoticPoint = 10000;
constexpr double kAsymptoticTolerance = 0.01;
constexpr int kTrianglePairs = 1000;
constexpr int kHomogeneityCases = 500;
constexpr std::int64_t kTriangleRange = 20;
constexpr int kConvexityDepth = 10;
constexpr std::int64_t kCuspWordBound = 8;
constexpr int kCuspConjDepth = 6;
constexpr std::uint64_t kSeed = 0x5eed0f7a11u;

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome oracle_equivalence(const FrickeTriple& triple, const VerifyHooks& hooks) {
  const Representation rep = build_representation(triple);
  const auto tree = enumerate_by_word_length(triple, kOracleWordBound, hooks.child_trace);
  const auto expected = slopes_up_to(kOracleWordBound);
  if (tree.size() != expected.size()) {
    return {false, "tree produced " + std::to_string(tree.size()) + " slopes, expected " +
                       std::to_string(expected.size())};
  }
  double worst = 0.0;
  for (const auto& e : tree) {
    const double oracle = evaluate(rep, oz_word(e.slope.m(), e.slope.n())).trace();
    const double err = std::abs(std::abs(e.trace) - std::abs(oracle)) / std::abs(oracle);
    worst = std::max(worst, err);
    if (!(err <= kOracleTolerance)) {
      return {false, "slope (" + std::to_string(e.slope.m()) + "," + std::to_string(e.slope.n()) +
                         "): tree " + format_sig10(e.trace) + " vs word " + format_sig10(oracle)};
    }
  }
  return {true, std::to_string(tree.size()) + " slopes, max relative error " + format_sig10(worst)};
}

Outcome totient_identity() {
  // Brute-force gcd loop, tallied by m + n.
  std::vector<std::uint64_t> by_sum(kTotientBound + 1, 0);
  for (std::int64_t m = 1; m < kTotientBound; ++m) {
    for (std::int64_t n = 1; m + n <= kTotientBound; ++n) {
      if (gcd64(m, n) == 1) ++by_sum[static_cast<std::size_t>(m + n)];
    }
  }
  const auto phi = totient_table(kTotientBound);
  std::uint64_t brute = 0, sieve = 0;
  for (std::int64_t s = 2; s <= kTotientBound; ++s) {
    brute += by_sum[static_cast<std::size_t>(s)];
    sieve += phi[static_cast<std::size_t>(s)];
    const std::uint64_t mobius = primitive_pairs_count(s);
    if (brute != sieve || brute != mobius) {
      return {false, "mismatch at L=" + std::to_string(s) + ": gcd " + std::to_string(brute) +
                         ", totient " + std::to_string(sieve) + ", moebius " + std::to_string(mobius)};
    }
  }
  const double ratio = static_cast<double>(primitive_pairs_count(kAsymptoticPoint)) /
                       asymptotic_prediction(static_cast<double>(kAsymptoticPoint));
  if (!(std::abs(ratio - 1.0) <= kAsymptoticTolerance)) {
    return {false, "f(10^4)/prediction = " + format_sig10(ratio)};
  }
  return {true, "exact for L<=1000; f(10^4)/prediction = " + format_sig10(ratio)};
}

Outcome triangle_inequality(const FrickeTriple& triple) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::int64_t> coord(-kTriangleRange, kTriangleRange);
  std::uniform_int_distribution<std::int64_t> factor(1, 12);

  for (int i = 0; i < kHomogeneityCases; ++i) {
    const HomologyClass h{coord(rng), coord(rng)};
    const std::int64_t k = factor(rng);
    const auto base = valuation_parts(triple, h);
    const auto scaled = valuation_parts(triple, k * h);
    const bool same = scaled.multiplicity == k * base.multiplicity &&
                      (base.multiplicity == 0 || (scaled.primitive == base.primitive &&
                                                  scaled.primitive_length == base.primitive_length));
    if (!same) {
      return {false, "homogeneity fails at k=" + std::to_string(k) + ", h=(" +
                         std::to_string(h.m) + "," + std::to_string(h.n) + ")"};
    }
  }

  double min_margin = std::numeric_limits<double>::infinity();
  int strict_pairs = 0;
  for (int i = 0; i < kTrianglePairs; ++i) {
    const HomologyClass h{coord(rng), coord(rng)};
    const HomologyClass g{coord(rng), coord(rng)};
    const auto r = triangle_check(triple, h, g);
    if (!(r.lhs <= r.rhs + 1e-9)) {
      return {false, "l(h+g) > l(h)+l(g) for h=(" + std::to_string(h.m) + "," + std::to_string(h.n) +
                         "), g=(" + std::to_string(g.m) + "," + std::to_string(g.n) + ")"};
    }
    if (!r.parallel) {
      if (!(r.margin > 0.0)) {
        return {false, "no strict margin for h=(" + std::to_string(h.m) + "," + std::to_string(h.n) +
                           "), g=(" + std::to_string(g.m) + "," + std::to_string(g.n) + ")"};
      }
      ++strict_pairs;
      min_margin = std::min(min_margin, r.margin);
    }
  }
  std::ostringstream detail;
  detail << kHomogeneityCases << " homogeneity cases exact; " << strict_pairs
         << " non-parallel pairs strict, min margin " << min_margin;
  return {true, detail.str()};
}

Outcome strict_convexity(const FrickeTriple& triple) {
  const BallApprox ball = build_ball(triple, kConvexityDepth);
  const bool ok = ball.vertices.size() == ball.sample_count && ball.min_turn > 0.0;
  std::ostringstream detail;
  detail << ball.vertices.size() << " vertices of " << ball.sample_count
         << " samples, min turn " << ball.min_turn;
  return {ok, detail.str()};
}

Outcome cusp_avoidance(const FrickeTriple& triple) {
  const auto reports = verify_cusp_avoidance(triple, kCuspWordBound, kCuspConjDepth);
  double worst = 0.0;
  for (const auto& r : reports) {
    worst = std::max(worst, r.max_height);
    if (!(r.max_height < kCuspHeightBound)) {
      return {false, "slope (" + std::to_string(r.slope.m()) + "," + std::to_string(r.slope.n()) +
                         ") has a lift of radius " + format_sig10(r.max_height)};
    }
  }
  return {true, std::to_string(reports.size()) + " slopes, max radius " + format_sig10(worst)};
}

const std::map<std::string, std::string, std::less<>>& aliases() {
  static const std::map<std::string, std::string, std::less<>> table{
      {"oracle", "oracle-equivalence"},   {"oracle-equivalence", "oracle-equivalence"},
      {"totient", "totient-identity"},    {"totient-identity", "totient-identity"},
      {"triangle", "triangle-inequality"}, {"triangle-inequality", "triangle-inequality"},
      {"convexity", "strict-convexity"},  {"strict-convexity", "strict-convexity"},
      {"cusp", "cusp-avoidance"},         {"cusp-avoidance", "cusp-avoidance"},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"oracle-equivalence", "totient-identity", "triangle-inequality", "strict-convexity",
          "cusp-avoidance"};
}

std::vector<std::string> resolve_suites(std::string_view name) {
  if (name == "all") return suite_names();
  const auto& table = aliases();
  auto it = table.find(name);
  if (it == table.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
  }
  return {it->second};
}

SuiteResult run_suite(std::string_view name, const FrickeTriple& triple, const VerifyHooks& hooks) {
  const auto resolved = resolve_suites(name);
  if (resolved.size() != 1) throw Error(ErrorCode::InvalidArgument, "run_suite takes one suite");
  SuiteResult result;
  result.name = resolved.front();
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o{false, ""};
    if (result.name == "oracle-equivalence") {
      o = oracle_equivalence(triple, hooks);
    } else if (result.name == "totient-identity") {
      o = totient_identity();
    } else if (result.name == "triangle-inequality") {
      o = triangle_inequality(triple);
    } else if (result.name == "strict-convexity") {
      o = strict_convexity(triple);
    } else {
      o = cusp_avoidance(triple);
    }
    result.passed = o.passed;
    result.detail = std::move(o.detail);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SuiteResult> run_suites(std::span<const std::string> names, const FrickeTriple& triple,
                                    const VerifyHooks& hooks) {
  std::vector<SuiteResult> results;
  for (const auto& name : names) {
    for (const auto& resolved : resolve_suites(name)) {
      results.push_back(run_suite(resolved, triple, hooks));
    }
  }
  return results;
}

}  // namespace ptorus
