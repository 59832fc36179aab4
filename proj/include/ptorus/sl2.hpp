#pragma once

// Real and integer 2x2 unit-determinant matrices, Fricke trace coordinates
// of a cusped hyperbolic punctured torus, and trace/length conversions.

#include <utility>

#include "ptorus/numeric.hpp"

namespace ptorus {

template <class T>
struct BasicMat2 {
  T a{1}, b{0}, c{0}, d{1};

  static BasicMat2 identity() { return {T(1), T(0), T(0), T(1)}; }

  T trace() const { return a + d; }
  T det() const { return a * d - b * c; }

  // Adjugate divided by the determinant; for det = 1 this is [[d,-b],[-c,a]].
  BasicMat2 inverse() const {
    T det_v = det();
    if (det_v == T(1)) return {d, -b, -c, a};
    return {d / det_v, -b / det_v, -c / det_v, a / det_v};
  }

  BasicMat2 operator-() const { return {-a, -b, -c, -d}; }

  friend BasicMat2 operator*(const BasicMat2& l, const BasicMat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }

  friend bool operator==(const BasicMat2&, const BasicMat2&) = default;
};

using Mat2 = BasicMat2<double>;
using IntMat2 = BasicMat2<BigInt>;

/// Fricke coordinates (tr rho(s), tr rho(t), tr rho(st)).
struct FrickeTriple {
  double x = 3.0;
  double y = 3.0;
  double z = 3.0;

  friend bool operator==(const FrickeTriple&, const FrickeTriple&) = default;
};

/// The modular torus, (3, 3, 3).
inline constexpr FrickeTriple kModularTriple{3.0, 3.0, 3.0};

// Acceptance thresholds for triples.
inline constexpr double kTripleTolerance = 1e-9;
inline constexpr double kParabolicMargin = 1e-9;

/// x^2 + y^2 + z^2 - xyz; zero exactly when the puncture is a cusp.
double validate_triple(double x, double y, double z);

/// True when min(x,y,z) > 2 + 1e-9 and |residual| <= 1e-9 * max(1, xyz).
bool is_valid_triple(const FrickeTriple& triple);

/// Throws Error(InvalidTriple) with a diagnostic when the triple is rejected.
void require_valid_triple(const FrickeTriple& triple);

struct TripleRoots {
  double z_minus;
  double z_plus;
};

/// Both roots z of z^2 - xyz + x^2 + y^2 = 0. Throws NoHyperbolicStructure
/// when x, y <= 2 or the discriminant is negative.
TripleRoots complete_triple(double x, double y);

/// Images of the free generators s and t.
struct Representation {
  Mat2 a;
  Mat2 b;
  FrickeTriple triple;
};

/// A = [[x, 1], [-1, 0]] and a lower-triangular B solving the trace
/// equations. Post-conditions (traces, commutator trace -2) are checked
/// before returning.
Representation build_representation(const FrickeTriple& triple);

/// Integer representation of the modular torus,
/// A = [[1,1],[1,2]], B = [[1,-1],[-1,2]].
struct IntRepresentation {
  IntMat2 a;
  IntMat2 b;
};

IntRepresentation modular_integer_representation();

/// Commutator A B A^-1 B^-1.
Mat2 commutator(const Mat2& a, const Mat2& b);

/// Translation length 2 arccosh(|t| / 2). Throws NotHyperbolic for |t| <= 2.
double hyperbolic_length(double trace);

/// Largest |trace| whose geodesic length does not exceed `length`.
double trace_bound(double length);

/// Image of w under the Moebius map of m.
double mobius(const Mat2& m, double w);

/// Attracting/repelling fixed points p < q on the real line; roots of
/// c w^2 + (d - a) w - b = 0. Throws AxisThroughInfinity when c = 0 and
/// NotHyperbolic when |trace| <= 2.
std::pair<double, double> fixed_points(const Mat2& m);

}  // namespace ptorus
