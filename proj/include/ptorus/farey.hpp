#pragma once

// Enumeration of simple closed geodesics through the Stern-Brocot slope
// trees. Each slope carries the trace of its primitive class; the mediant
// trace follows the Vieta flip t(a+b) = t(a) t(b) - t(a-b).

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ptorus/error.hpp"
#include "ptorus/numeric.hpp"
#include "ptorus/sl2.hpp"
#include "ptorus/words.hpp"

namespace ptorus {

/// Rule producing a mediant trace from its parents and the opposite class.
using TraceRule = double (*)(double t_a, double t_b, double t_opposite);

template <class T>
T child_trace(const T& t_a, const T& t_b, const T& t_opposite) {
  return t_a * t_b - t_opposite;
}

inline double vieta_rule(double t_a, double t_b, double t_opposite) {
  return child_trace(t_a, t_b, t_opposite);
}

/// Farey mediant of two neighbouring classes; throws NotNeighbors unless
/// |m_a n_b - n_a m_b| = 1.
HomologyClass mediant(HomologyClass a, HomologyClass b);

/// (x, y, xy - z): the seed of the tree covering slopes with m n < 0.
FrickeTriple quadrant2_seed(const FrickeTriple& triple);

/// x, y and both tree-root traces at extended precision. z is recomputed
/// from x and y so the Fricke relation holds to working precision.
struct HighTriple {
  HighFloat x, y, z, z2;
};

/// Must be called inside a ScopedPrecision.
HighTriple to_high(const FrickeTriple& triple);

template <class T>
struct TreeNode {
  HomologyClass left, right;
  T t_left, t_right, t_mediant;
  int depth = 0;
};

struct TreeRule {
  template <class T>
  T operator()(const T& a, const T& b, const T& opp) const { return child_trace(a, b, opp); }
};

/// Throws Error(Internal) unless t_mediant > max(t_left, t_right), with
/// ties allowed at depth 0. This monotonicity is what makes trace and
/// length cutoffs sound.
template <class T>
void check_monotone(const TreeNode<T>& node) {
  // A root mediant may tie its parents (all three traces of (3,3,3) are 3).
  const bool ok = node.depth == 0
                      ? node.t_mediant >= node.t_left && node.t_mediant >= node.t_right
                      : node.t_mediant > node.t_left && node.t_mediant > node.t_right;
  if (!ok) {
    const HomologyClass med{node.left.m + node.right.m, node.left.n + node.right.n};
    throw Error(ErrorCode::Internal, "trace monotonicity violated at slope (" +
                                         std::to_string(med.m) + "," + std::to_string(med.n) + ")");
  }
}

/// The two children of an expanded node, left child first.
template <class T, class Rule = TreeRule>
std::pair<TreeNode<T>, TreeNode<T>> expand(const TreeNode<T>& node, Rule&& rule = {}) {
  const HomologyClass med{node.left.m + node.right.m, node.left.n + node.right.n};
  return {TreeNode<T>{node.left, med, node.t_left, node.t_mediant,
                      rule(node.t_left, node.t_mediant, node.t_right), node.depth + 1},
          TreeNode<T>{med, node.right, node.t_mediant, node.t_right,
                      rule(node.t_mediant, node.t_right, node.t_left), node.depth + 1}};
}

namespace detail {
template <bool Checked, class T, class Visit, class Rule>
void walk(TreeNode<T> root, Visit& visit, Rule& rule) {
  std::vector<TreeNode<T>> stack;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    TreeNode<T> node = std::move(stack.back());
    stack.pop_back();
    const HomologyClass med{node.left.m + node.right.m, node.left.n + node.right.n};
    if (!visit(med, node.t_mediant, node.depth)) continue;
    if constexpr (Checked) check_monotone(node);
    auto [left_child, right_child] = expand(node, rule);
    stack.push_back(std::move(right_child));
    stack.push_back(std::move(left_child));
  }
}
}  // namespace detail

/// Depth-first walk of one slope tree from `root`, left subtree first.
/// visit(mediant_class, mediant_trace, depth) returns whether to descend.
template <class T, class Visit, class Rule = TreeRule>
void walk_tree(TreeNode<T> root, Visit&& visit, Rule&& rule = {}) {
  detail::walk<false>(std::move(root), visit, rule);
}

/// walk_tree for walks pruned by trace: every descended node must pass
/// check_monotone, so roots have to come from sink_roots.
template <class T, class Visit, class Rule = TreeRule>
void walk_monotone_tree(TreeNode<T> root, Visit&& visit, Rule&& rule = {}) {
  detail::walk<true>(std::move(root), visit, rule);
}

/// The Farey triangle on which the traces are smallest. Away from it,
/// traces grow along every path of the dual tree.
template <class T>
struct SinkTriangle {
  std::array<HomologyClass, 3> classes;
  std::array<T, 3> traces;
};

/// Vieta descent from the triangle {(1,0), (0,1), (1,1)} with traces
/// (x, y, z). Throws Internal if the descent does not terminate.
template <class T>
SinkTriangle<T> find_sink(const T& x, const T& y, const T& z) {
  SinkTriangle<T> tri{{HomologyClass{1, 0}, HomologyClass{0, 1}, HomologyClass{1, 1}}, {x, y, z}};
  constexpr int kMaxFlips = 1 << 16;
  for (int flips = 0;; ++flips) {
    bool moved = false;
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
      T flipped = child_trace(tri.traces[j], tri.traces[k], tri.traces[i]);
      if (flipped < tri.traces[i]) {
        const HomologyClass sum = tri.classes[j] + tri.classes[k];
        const bool was_sum = tri.classes[i] == sum || tri.classes[i] == -sum;
        tri.classes[i] = was_sum ? tri.classes[j] + (-tri.classes[k]) : sum;
        tri.traces[i] = std::move(flipped);
        moved = true;
      }
    }
    if (!moved) return tri;
    if (flips == kMaxFlips) throw Error(ErrorCode::Internal, "Vieta descent did not terminate");
  }
}

/// The three subtrees hanging off the edges of the sink triangle. Together
/// with the triangle's vertices they cover every slope exactly once.
template <class T>
std::vector<TreeNode<T>> sink_roots(const SinkTriangle<T>& tri) {
  std::vector<TreeNode<T>> roots;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    const HomologyClass sum = tri.classes[j] + tri.classes[k];
    const bool opposite_is_sum = tri.classes[i] == sum || tri.classes[i] == -sum;
    // Orient the edge so that left + right is the vertex across it.
    const HomologyClass right = opposite_is_sum ? -tri.classes[k] : tri.classes[k];
    roots.push_back(TreeNode<T>{tri.classes[j], right, tri.traces[j], tri.traces[k],
                                child_trace(tri.traces[j], tri.traces[k], tri.traces[i]), 0});
  }
  return roots;
}

/// The two tree roots: ((1,0),(0,1)) with mediant trace z, and
/// ((1,0),(0,-1)) with mediant trace z2 = xy - z.
template <class T>
std::vector<TreeNode<T>> tree_roots(const T& x, const T& y, const T& z, const T& z2) {
  return {TreeNode<T>{{1, 0}, {0, 1}, x, y, z, 0}, TreeNode<T>{{1, 0}, {0, -1}, x, y, z2, 0}};
}

/// Trace of a slope by descending the tree that contains it.
template <class T, class Rule = TreeRule>
T slope_trace_generic(const T& x, const T& y, const T& z, const T& z2, const Slope& slope,
                      Rule&& rule = {}) {
  if (slope.n() == 0) return x;
  if (slope.m() == 0) return y;
  const bool second = slope.m() < 0;
  const std::int64_t tm = second ? -slope.m() : slope.m();
  const std::int64_t tn = slope.n();
  // Walk on (m, |n|) in the first quadrant.
  HomologyClass left{1, 0}, right{0, 1};
  T t_left = x, t_right = y, t_med = second ? z2 : z;
  for (;;) {
    const HomologyClass med{left.m + right.m, left.n + right.n};
    if (med.m == tm && med.n == tn) return t_med;
    // Target lies on the (1,0) side of the mediant when med x target < 0.
    const bool go_left = med.m * tn - med.n * tm < 0;
    if (go_left) {
      T next = rule(t_left, t_med, t_right);
      right = med;
      t_right = std::move(t_med);
      t_med = std::move(next);
    } else {
      T next = rule(t_med, t_right, t_left);
      left = med;
      t_left = std::move(t_med);
      t_med = std::move(next);
    }
  }
}

double slope_trace(const FrickeTriple& triple, const Slope& slope, TraceRule rule = nullptr);

template <class T>
struct BasicSpectrumEntry {
  Slope slope;
  T trace{};
  double length = 0.0;
};

using SpectrumEntry = BasicSpectrumEntry<double>;
using ExactSpectrumEntry = BasicSpectrumEntry<BigInt>;

/// Sort key (length, m, n).
template <class T>
void sort_spectrum(std::vector<BasicSpectrumEntry<T>>& entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& l, const auto& r) {
    if (l.length != r.length) return l.length < r.length;
    if (l.slope.m() != r.slope.m()) return l.slope.m() < r.slope.m();
    return l.slope.n() < r.slope.n();
  });
}

struct EnumerateOptions {
  unsigned parallel = 1;
};

/// One entry per unoriented simple closed geodesic of length <= max_length
/// (one per canonical slope), sorted by (length, m, n).
std::vector<SpectrumEntry> enumerate_spectrum(const FrickeTriple& triple, double max_length,
                                              const EnumerateOptions& options = {});

/// Number of entries enumerate_spectrum would return, without storing them.
std::uint64_t count_spectrum(const FrickeTriple& triple, double max_length,
                             const EnumerateOptions& options = {});

/// Exact-integer enumeration for an integer triple with
/// x^2 + y^2 + z^2 = xyz; throws InvalidTriple otherwise.
std::vector<ExactSpectrumEntry> exact_spectrum(const BigInt& x, const BigInt& y, const BigInt& z,
                                               double max_length,
                                               const EnumerateOptions& options = {});

/// exact_spectrum on the modular torus (3, 3, 3).
std::vector<ExactSpectrumEntry> exact_markoff_spectrum(double max_length,
                                                       const EnumerateOptions& options = {});

/// Every canonical slope with |m| + |n| <= max_word_length and its tree
/// trace; `rule` replaces the Vieta flip when non-null. Sorted by
/// (length, m, n); lengths use |trace|.
std::vector<SpectrumEntry> enumerate_by_word_length(const FrickeTriple& triple,
                                                    std::int64_t max_word_length,
                                                    TraceRule rule = nullptr);

}  // namespace ptorus
