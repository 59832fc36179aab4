#include "ptorus/norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <type_traits>
#include <utility>

#include "ptorus/error.hpp"
#include "ptorus/farey.hpp"

namespace ptorus {
namespace {

struct HighPoint {
  HighFloat x, y;
};

template <class P>
using Coord = std::decay_t<decltype(std::declval<P>().x)>;

template <class P>
Coord<P> cross(const P& o, const P& a, const P& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

template <class P>
bool point_less(const P& l, const P& r) {
  return l.x < r.x || (l.x == r.x && l.y < r.y);
}

// Andrew's monotone chain; sorts and deduplicates `pts` in place and returns
// the strictly convex hull counterclockwise (collinear points dropped).
template <class P>
std::vector<P> monotone_chain(std::vector<P>& pts) {
  std::sort(pts.begin(), pts.end(), point_less<P>);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const P& l, const P& r) { return l.x == r.x && l.y == r.y; }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

template <class P>
Coord<P> shoelace(const std::vector<P>& poly) {
  Coord<P> twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P& a = poly[i];
    const P& b = poly[(i + 1) % poly.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

template <class P>
Coord<P> min_turn(const std::vector<P>& poly) {
  Coord<P> best = cross(poly[poly.size() - 1], poly[0], poly[1]);
  for (std::size_t i = 1; i < poly.size(); ++i) {
    Coord<P> c = cross(poly[i - 1], poly[i], poly[(i + 1) % poly.size()]);
    if (c < best) best = c;
  }
  return best;
}

HighFloat high_length(const HighFloat& trace) {
  const HighFloat h = abs(trace) / 2;
  return 2 * log(h + sqrt((h - 1) * (h + 1)));
}

// Upper bound on log10 of every tree trace up to `depth`, from
// log t(a+b) < log t(a) + log t(b).
double max_log10_trace(const FrickeTriple& triple, int depth) {
  const double lx = std::log10(triple.x), ly = std::log10(triple.y);
  const double lz = std::log10(triple.z), lz2 = std::log10(triple.x * triple.y - triple.z);
  double best = std::max({lx, ly, lz, lz2});
  auto visit = [&](const HomologyClass&, double lt, int d) {
    best = std::max(best, lt);
    return d < depth;
  };
  // Sums grow monotonically, so the walker's guard holds.
  auto rule = [](double a, double b, double) { return a + b; };
  for (auto& root : tree_roots(lx, ly, lz, lz2)) walk_tree(std::move(root), visit, rule);
  return best;
}

}  // namespace

ValuationParts valuation_parts(const FrickeTriple& triple, HomologyClass h) {
  require_valid_triple(triple);
  ValuationParts parts;
  if (h.m == 0 && h.n == 0) return parts;
  parts.multiplicity = gcd64(h.m, h.n);
  parts.primitive = Slope(h.m / parts.multiplicity, h.n / parts.multiplicity);
  parts.primitive_length = hyperbolic_length(slope_trace(triple, parts.primitive));
  return parts;
}

double valuation(const FrickeTriple& triple, HomologyClass h) {
  return valuation_parts(triple, h).value();
}

TriangleReport triangle_check(const FrickeTriple& triple, HomologyClass h, HomologyClass g) {
  const auto ph = valuation_parts(triple, h);
  const auto pg = valuation_parts(triple, g);
  const auto ps = valuation_parts(triple, h + g);

  TriangleReport report;
  report.lhs = ps.value();
  report.rhs = ph.value() + pg.value();
  report.parallel = h.m * g.n - h.n * g.m == 0;

  const double longest = std::max({ph.primitive_length, pg.primitive_length, ps.primitive_length});
  ScopedPrecision precision(digits_for_traces(longest / (2.0 * std::numbers::ln10)));
  const HighTriple seeds = to_high(triple);
  auto high_value = [&](const ValuationParts& p) -> HighFloat {
    if (p.multiplicity == 0) return HighFloat(0);
    const HighFloat t = slope_trace_generic(seeds.x, seeds.y, seeds.z, seeds.z2, p.primitive);
    return HighFloat(p.multiplicity) * high_length(t);
  };
  const HighFloat margin = high_value(ph) + high_value(pg) - high_value(ps);
  report.margin = margin.convert_to<double>();
  return report;
}

std::vector<Point2> ball_boundary_points(const FrickeTriple& triple, int depth) {
  require_valid_triple(triple);
  std::vector<Point2> pts;
  auto add = [&pts](const HomologyClass& h, double trace) {
    const double len = hyperbolic_length(trace);
    const Point2 p{static_cast<double>(h.m) / len, static_cast<double>(h.n) / len};
    pts.push_back(p);
    pts.push_back({-p.x, -p.y});
  };
  add({1, 0}, triple.x);
  add({0, 1}, triple.y);
  const auto seed2 = quadrant2_seed(triple);
  for (auto& root : tree_roots(triple.x, triple.y, triple.z, seed2.z)) {
    walk_tree(std::move(root), [&](const HomologyClass& h, double t, int d) {
      if (d > depth) return false;
      add(h, t);
      return true;
    });
  }
  return pts;
}

BallApprox hull_area(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  auto hull = monotone_chain(pts);
  if (hull.size() < 3) {
    throw Error(ErrorCode::Degenerate, "points are collinear or fewer than three");
  }
  BallApprox ball;
  ball.sample_count = pts.size();
  ball.area = shoelace(hull);
  ball.min_turn = min_turn(hull);
  ball.vertices = std::move(hull);
  return ball;
}

BallApprox build_ball(const FrickeTriple& triple, int depth) {
  require_valid_triple(triple);
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be nonnegative");

  ScopedPrecision precision(digits_for_traces(max_log10_trace(triple, depth)));
  const HighTriple seeds = to_high(triple);

  std::vector<HighPoint> pts;
  auto add = [&pts](const HomologyClass& h, const HighFloat& trace) {
    const HighFloat len = high_length(trace);
    HighPoint p{HighFloat(h.m) / len, HighFloat(h.n) / len};
    HighPoint q{-p.x, -p.y};
    pts.push_back(std::move(p));
    pts.push_back(std::move(q));
  };
  add({1, 0}, seeds.x);
  add({0, 1}, seeds.y);
  for (auto& root : tree_roots(seeds.x, seeds.y, seeds.z, seeds.z2)) {
    walk_tree(std::move(root), [&](const HomologyClass& h, const HighFloat& t, int d) {
      if (d > depth) return false;
      add(h, t);
      return true;
    });
  }

  auto hull = monotone_chain(pts);
  if (hull.size() < 3) throw Error(ErrorCode::Degenerate, "ball samples are collinear");

  BallApprox ball;
  ball.depth = depth;
  ball.sample_count = pts.size();
  ball.area = shoelace(hull).convert_to<double>();
  ball.min_turn = min_turn(hull).convert_to<double>();
  ball.vertices.reserve(hull.size());
  for (const auto& p : hull) ball.vertices.push_back({p.x.convert_to<double>(), p.y.convert_to<double>()});
  return ball;
}

double predict_c(const BallApprox& ball, Convention convention) {
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  const double unoriented = ball.area / (2.0 * zeta2);
  return convention == Convention::oriented ? 2.0 * unoriented : unoriented;
}

double norm_eval_real(const BallApprox& ball, Point2 v) {
  if (ball.vertices.size() < 3) throw Error(ErrorCode::EmptyBall, "ball has no interior");
  if (v.x == 0.0 && v.y == 0.0) return 0.0;
  // Gauge of a convex polygon around the origin: the largest ratio
  // <n_e, v> / <n_e, p_e> over edges e with outward normal n_e.
  double gauge = -std::numeric_limits<double>::infinity();
  const auto& vs = ball.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Point2& p = vs[i];
    const Point2& q = vs[(i + 1) % vs.size()];
    const double nx = q.y - p.y;
    const double ny = p.x - q.x;
    const double offset = nx * p.x + ny * p.y;
    if (!(offset > 0.0)) continue;
    gauge = std::max(gauge, (nx * v.x + ny * v.y) / offset);
  }
  if (!std::isfinite(gauge)) throw Error(ErrorCode::EmptyBall, "ball does not contain the origin");
  return gauge;
}

}  // namespace ptorus
