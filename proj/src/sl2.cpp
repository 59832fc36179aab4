#include "ptorus/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptorus/error.hpp"

namespace ptorus {
namespace {

std::string triple_string(const FrickeTriple& t) {
  return "(" + format_sig10(t.x) + ", " + format_sig10(t.y) + ", " + format_sig10(t.z) + ")";
}

double triple_scale(const FrickeTriple& t) { return std::max(1.0, std::abs(t.x * t.y * t.z)); }

void check_close(double got, double want, const char* what) {
  if (std::abs(got - want) > 1e-9 * std::max(1.0, std::abs(want))) {
    throw Error(ErrorCode::Internal, std::string("representation post-condition failed: ") + what);
  }
}

}  // namespace

double validate_triple(double x, double y, double z) { return x * x + y * y + z * z - x * y * z; }

bool is_valid_triple(const FrickeTriple& t) {
  if (!std::isfinite(t.x) || !std::isfinite(t.y) || !std::isfinite(t.z)) return false;
  if (std::min({t.x, t.y, t.z}) <= 2.0 + kParabolicMargin) return false;
  return std::abs(validate_triple(t.x, t.y, t.z)) <= kTripleTolerance * triple_scale(t);
}

void require_valid_triple(const FrickeTriple& t) {
  if (!std::isfinite(t.x) || !std::isfinite(t.y) || !std::isfinite(t.z)) {
    throw Error(ErrorCode::InvalidTriple, "non-finite coordinate in " + triple_string(t));
  }
  if (std::min({t.x, t.y, t.z}) <= 2.0 + kParabolicMargin) {
    throw Error(ErrorCode::InvalidTriple, "every coordinate must exceed 2 in " + triple_string(t));
  }
  const double residual = validate_triple(t.x, t.y, t.z);
  if (std::abs(residual) > kTripleTolerance * triple_scale(t)) {
    throw Error(ErrorCode::InvalidTriple,
                "x^2+y^2+z^2-xyz = " + format_sig10(residual) + " for " + triple_string(t));
  }
}

TripleRoots complete_triple(double x, double y) {
  if (!(x > 2.0) || !(y > 2.0)) {
    throw Error(ErrorCode::NoHyperbolicStructure, "x and y must exceed 2");
  }
  const double p = x * y;
  const double disc = p * p - 4.0 * (x * x + y * y);
  if (disc < 0.0) {
    throw Error(ErrorCode::NoHyperbolicStructure,
                "x^2 y^2 < 4(x^2 + y^2) for x = " + format_sig10(x) + ", y = " + format_sig10(y));
  }
  const double root = std::sqrt(disc);
  const double z_plus = 0.5 * (p + root);
  // Product of the roots is x^2 + y^2; avoids cancellation in p - root.
  const double z_minus = (x * x + y * y) / z_plus;
  return {z_minus, z_plus};
}

Representation build_representation(const FrickeTriple& triple) {
  require_valid_triple(triple);
  const auto [x, y, z] = triple;
  // B = [[p, 0], [z - x p, y - p]] with p (y - p) = 1 gives det B = 1,
  // tr B = y and tr(AB) = z for A = [[x, 1], [-1, 0]].
  const double p = 0.5 * (y + std::sqrt(y * y - 4.0));
  const Mat2 a{x, 1.0, -1.0, 0.0};
  const Mat2 b{p, 0.0, z - x * p, 1.0 / p};

  check_close(a.trace(), x, "tr A");
  check_close(b.trace(), y, "tr B");
  check_close((a * b).trace(), z, "tr AB");
  check_close(b.det(), 1.0, "det B");
  check_close(commutator(a, b).trace(), -2.0, "tr [A,B]");
  return {a, b, triple};
}

IntRepresentation modular_integer_representation() {
  return {IntMat2{1, 1, 1, 2}, IntMat2{1, -1, -1, 2}};
}

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b * a.inverse() * b.inverse(); }

double hyperbolic_length(double trace) {
  const double t = std::abs(trace);
  if (!(t > 2.0)) {
    throw Error(ErrorCode::NotHyperbolic, "|trace| = " + format_sig10(t) + " <= 2");
  }
  return 2.0 * std::acosh(0.5 * t);
}

double trace_bound(double length) { return 2.0 * std::cosh(0.5 * length); }

double mobius(const Mat2& m, double w) { return (m.a * w + m.b) / (m.c * w + m.d); }

std::pair<double, double> fixed_points(const Mat2& m) {
  const double tr = m.trace();
  if (!(std::abs(tr) > 2.0)) {
    throw Error(ErrorCode::NotHyperbolic, "|trace| = " + format_sig10(std::abs(tr)) + " <= 2");
  }
  const double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
  if (std::abs(m.c) <= 1e-14 * scale) {
    throw Error(ErrorCode::AxisThroughInfinity, "lower-left entry vanishes");
  }
  // c w^2 + (d - a) w - b = 0; discriminant (a + d)^2 - 4 uses det = 1.
  const double root = std::sqrt((tr - 2.0) * (tr + 2.0));
  const double center = (m.a - m.d) / (2.0 * m.c);
  const double half = root / (2.0 * std::abs(m.c));
  return {center - half, center + half};
}

}  // namespace ptorus
