#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "ptorus/sl2.hpp"
#include "ptorus/words.hpp"

namespace ptorus {

/// Representation conjugated so that the cusp is at infinity and the cusp
/// stabilizer rho([A,B]) acts as z -> z + 1.
///
/// The conjugator has determinant +1, or -1 when a reflection was needed to
/// turn z -> z - 1 into z -> z + 1 (traces and lift radii are unchanged).
struct NormalizedRep {
  Representation rep;
  Mat2 conjugator;
  Mat2 cusp_generator;  // normalized commutator, +-[[1,1],[0,1]]
  bool reflected = false;
};

inline constexpr double kParabolicTolerance = 1e-9;

NormalizedRep normalize_cusp(const Representation& rep);

/// Euclidean radius |p - q| / 2 of the axis of m in the upper half-plane.
/// An axis through infinity would enter every cusp region: AxisThroughInfinity.
double lift_height(const Mat2& m);

struct LiftReport {
  Slope slope;
  double max_height = 0.0;
  int conj_depth = 0;
  std::size_t lifts_examined = 0;  // distinct lift matrices
};

/// Half the length-2 horocycle height: every lift of a simple closed
/// geodesic has radius below this.
inline constexpr double kCuspHeightBound = 0.5;

/// For each canonical slope with |m| + |n| <= word_bound, the largest lift
/// radius over g rho(W') g^-1 with W' a cyclic permutation of W_{m,n} and g
/// a reduced word of length <= conj_depth. Sorted by (word length, m, n).
std::vector<LiftReport> verify_cusp_avoidance(const FrickeTriple& triple, std::int64_t word_bound,
                                              int conj_depth, unsigned parallel = 1);

/// CSV with columns slope_m,slope_n,max_height,conj_depth.
void write_cusp_csv(std::ostream& out, const std::vector<LiftReport>& reports);

}  // namespace ptorus
