#pragma once

// The length norm on H1(T): l(h) is the length of the shortest multicurve
// in the class h. Its unit ball is approximated from inside by the convex
// hull of the boundary samples (m, n) / l(m, n).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ptorus/counting.hpp"
#include "ptorus/sl2.hpp"
#include "ptorus/words.hpp"

namespace ptorus {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

/// l(h) = multiplicity * length(primitive). Kept factored so that
/// l(k h) = k l(h) can be checked without rounding.
struct ValuationParts {
  std::int64_t multiplicity = 0;  // gcd(|m|, |n|); 0 for the trivial class
  Slope primitive;
  double primitive_length = 0.0;

  double value() const { return static_cast<double>(multiplicity) * primitive_length; }
};

ValuationParts valuation_parts(const FrickeTriple& triple, HomologyClass h);

double valuation(const FrickeTriple& triple, HomologyClass h);

/// l(h) + l(g) - l(h + g), with the margin evaluated at extended precision.
struct TriangleReport {
  double lhs = 0.0;     // l(h + g)
  double rhs = 0.0;     // l(h) + l(g)
  double margin = 0.0;  // rhs - lhs
  bool parallel = false;  // h and g are multiples of one class
};

TriangleReport triangle_check(const FrickeTriple& triple, HomologyClass h, HomologyClass g);

/// +-(m, n) / l(m, n) for the axes and every slope of both trees up to
/// Farey generation `depth` (depth 0 gives the two tree roots).
std::vector<Point2> ball_boundary_points(const FrickeTriple& triple, int depth);

struct BallApprox {
  std::vector<Point2> vertices;  // counterclockwise
  double area = 0.0;
  int depth = -1;                // -1 when built from bare points
  std::size_t sample_count = 0;  // distinct input points
  double min_turn = 0.0;         // smallest cross product of consecutive edges
};

/// Convex hull (counterclockwise, collinear points dropped) and shoelace
/// area. Throws Degenerate for fewer than 3 points or a collinear set.
BallApprox hull_area(std::span<const Point2> points);

/// Inner approximation of the unit ball. Sampling and the hull run at a
/// precision high enough to resolve the tiny turns between neighbouring
/// samples, so every sample is a vertex when the norm is strictly convex.
BallApprox build_ball(const FrickeTriple& triple, int depth);

/// Area / (2 zeta(2)) for unoriented counts, Area / zeta(2) for oriented.
double predict_c(const BallApprox& ball, Convention convention);

/// Gauge of the hull polygon at v: an upper bound on the norm, since the
/// hull lies inside the true ball. Returns 0 at the origin.
double norm_eval_real(const BallApprox& ball, Point2 v);

}  // namespace ptorus
