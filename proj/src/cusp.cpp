#include "ptorus/cusp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <thread>
#include <unordered_set>

#include "ptorus/error.hpp"

namespace ptorus {
namespace {

double max_entry(const Mat2& m) {
  return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

Mat2 conjugate(const Mat2& g, const Mat2& g_inv, const Mat2& m) { return g * m * g_inv; }

// Quantizes an entry at 1e-7 absolute granularity, falling back to a
// relative key once the scaled value would overflow 64 bits.
std::int64_t quantize(double v) {
  if (std::abs(v) < 1e11) return std::llround(v * 1e7);
  int exp = 0;
  const double mant = std::frexp(v, &exp);
  return (static_cast<std::int64_t>(exp) << 48) ^ std::llround(mant * 0x1p40);
}

struct LiftKey {
  std::array<std::int64_t, 4> q;
  friend bool operator==(const LiftKey&, const LiftKey&) = default;
};

struct LiftKeyHash {
  std::size_t operator()(const LiftKey& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k.q) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

// M and -M are the same isometry.
LiftKey lift_key(const Mat2& m) {
  LiftKey k{{quantize(m.a), quantize(m.b), quantize(m.c), quantize(m.d)}};
  const bool flip = k.q[0] < 0 || (k.q[0] == 0 && (k.q[1] < 0 || (k.q[1] == 0 && k.q[2] < 0)));
  if (flip) {
    for (auto& v : k.q) v = -v;
  }
  return k;
}

struct Conjugator {
  Mat2 g;
  Mat2 g_inv;
};

// rho(g) for every reduced word g of length <= depth, identity first.
std::vector<Conjugator> reduced_conjugators(const Representation& rep, int depth) {
  const std::array<Letter, 4> letters{Letter{Generator::s, 1}, Letter{Generator::s, -1},
                                      Letter{Generator::t, 1}, Letter{Generator::t, -1}};
  std::array<Mat2, 4> images{rep.a, rep.a.inverse(), rep.b, rep.b.inverse()};

  struct Item {
    Mat2 g;
    Mat2 g_inv;
    int last;  // index into letters, -1 for the identity
  };
  std::vector<Item> layer{{Mat2::identity(), Mat2::identity(), -1}};
  std::vector<Conjugator> out{{Mat2::identity(), Mat2::identity()}};
  for (int len = 1; len <= depth; ++len) {
    std::vector<Item> next;
    next.reserve(layer.size() * 3);
    for (const Item& item : layer) {
      for (int i = 0; i < 4; ++i) {
        if (item.last >= 0 && letters[static_cast<std::size_t>(item.last)].cancels(letters[static_cast<std::size_t>(i)])) continue;
        const Mat2& img = images[static_cast<std::size_t>(i)];
        const Mat2& img_inv = images[static_cast<std::size_t>(i ^ 1)];
        Item n{item.g * img, img_inv * item.g_inv, i};
        out.push_back({n.g, n.g_inv});
        next.push_back(n);
      }
    }
    layer = std::move(next);
  }
  return out;
}

LiftReport examine_slope(const NormalizedRep& frame, const std::vector<Conjugator>& conjugators,
                         const Slope& slope, int conj_depth) {
  const Word w = oz_word(slope.m(), slope.n());
  LiftReport report;
  report.slope = slope;
  report.conj_depth = conj_depth;
  std::vector<Mat2> rotations;
  for (std::size_t k = 0; k < w.size(); ++k) rotations.push_back(evaluate(frame.rep, w.rotated(k)));
  // Conjugators outermost, so a deeper scan visits a superset in the same order.
  std::unordered_set<LiftKey, LiftKeyHash> seen;
  for (const auto& c : conjugators) {
    for (const Mat2& base : rotations) {
      const Mat2 lift = conjugate(c.g, c.g_inv, base);
      if (!seen.insert(lift_key(lift)).second) continue;
      report.max_height = std::max(report.max_height, lift_height(lift));
    }
  }
  report.lifts_examined = seen.size();
  return report;
}

}  // namespace

NormalizedRep normalize_cusp(const Representation& rep) {
  const Mat2 k = commutator(rep.a, rep.b);
  const double scale = std::max({1.0, max_entry(rep.a), max_entry(rep.b)});
  const double tr = k.trace();
  if (std::abs(std::abs(tr) - 2.0) > kParabolicTolerance * scale * scale) {
    throw Error(ErrorCode::NotParabolic, "commutator trace " + format_sig10(tr) + " is not +-2");
  }
  // P = +-K has trace +2; move its fixed point to infinity.
  const Mat2 p = tr > 0 ? k : -k;
  Mat2 g = Mat2::identity();
  if (std::abs(p.c) > 1e-14 * max_entry(p)) {
    const double w = (p.a - p.d) / (2.0 * p.c);
    g = Mat2{0.0, -1.0, 1.0, -w};
  }
  const Mat2 p1 = conjugate(g, g.inverse(), p);
  const double tau = p1.b;
  if (!(std::abs(tau) > 0.0)) {
    throw Error(ErrorCode::NotParabolic, "commutator is the identity");
  }
  // z -> z / |tau| makes the translation length 1.
  const double root = std::sqrt(std::abs(tau));
  g = Mat2{1.0 / root, 0.0, 0.0, root} * g;
  NormalizedRep out;
  if (tau < 0.0) {
    g = Mat2{1.0, 0.0, 0.0, -1.0} * g;
    out.reflected = true;
  }
  const Mat2 g_inv = g.inverse();
  out.conjugator = g;
  out.rep = {conjugate(g, g_inv, rep.a), conjugate(g, g_inv, rep.b), rep.triple};
  out.cusp_generator = conjugate(g, g_inv, k);
  return out;
}

double lift_height(const Mat2& m) {
  const auto [p, q] = fixed_points(m);
  return 0.5 * (q - p);
}

std::vector<LiftReport> verify_cusp_avoidance(const FrickeTriple& triple, std::int64_t word_bound,
                                              int conj_depth, unsigned parallel) {
  if (word_bound < 1) throw Error(ErrorCode::InvalidArgument, "word bound must be positive");
  if (conj_depth < 0) throw Error(ErrorCode::InvalidArgument, "conjugation depth must be nonnegative");
  const NormalizedRep frame = normalize_cusp(build_representation(triple));
  const auto conjugators = reduced_conjugators(frame.rep, conj_depth);
  const auto slopes = slopes_up_to(word_bound);

  std::vector<LiftReport> reports(slopes.size());
  const unsigned workers = std::clamp<unsigned>(parallel, 1u, static_cast<unsigned>(slopes.size()));
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < slopes.size(); i += workers) {
            reports[i] = examine_slope(frame, conjugators, slopes[i], conj_depth);
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return reports;
}

void write_cusp_csv(std::ostream& out, const std::vector<LiftReport>& reports) {
  out << "slope_m,slope_n,max_height,conj_depth\n";
  for (const auto& r : reports) {
    out << r.slope.m() << ',' << r.slope.n() << ',' << format_sig10(r.max_height) << ','
        << r.conj_depth << '\n';
  }
}

}  // namespace ptorus
