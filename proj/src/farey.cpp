#include "ptorus/farey.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <thread>

namespace ptorus {
namespace {

// Expands the frontier breadth-first on the calling thread until there is
// enough independent work, then finishes each frontier subtree on a worker.
// `accept(trace)` decides emission and descent; emit(local, class, trace)
// records into the worker-local accumulator.
template <class T, class Local, class Accept, class Emit>
std::vector<Local> parallel_walk(std::vector<TreeNode<T>> roots, unsigned parallel, Accept accept,
                                 Emit emit) {
  const unsigned workers = std::max(1u, parallel);
  std::vector<Local> locals(workers);
  auto visit_into = [&](Local& local) {
    return [&accept, &emit, &local](const HomologyClass& med, const T& trace, int) {
      if (!accept(trace)) return false;
      emit(local, med, trace);
      return true;
    };
  };

  if (workers == 1) {
    for (auto& root : roots) walk_monotone_tree(std::move(root), visit_into(locals[0]));
    return locals;
  }

  std::deque<TreeNode<T>> frontier(std::make_move_iterator(roots.begin()),
                                   std::make_move_iterator(roots.end()));
  const std::size_t target = 16 * static_cast<std::size_t>(workers);
  while (!frontier.empty() && frontier.size() < target) {
    TreeNode<T> node = std::move(frontier.front());
    frontier.pop_front();
    const HomologyClass med{node.left.m + node.right.m, node.left.n + node.right.n};
    if (!accept(node.t_mediant)) continue;
    emit(locals[0], med, node.t_mediant);
    check_monotone(node);
    auto [l, r] = expand(node);
    frontier.push_back(std::move(l));
    frontier.push_back(std::move(r));
  }

  std::vector<std::vector<TreeNode<T>>> shares(workers);
  for (std::size_t i = 0; i < frontier.size(); ++i) shares[i % workers].push_back(std::move(frontier[i]));

  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (auto& node : shares[w]) walk_monotone_tree(std::move(node), visit_into(locals[w]));
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return locals;
}

// Trace-pruned enumeration from the sink triangle: its vertices go to the
// first accumulator, then the three monotone subtrees are walked.
template <class T, class Local, class Accept, class Emit>
std::vector<Local> pruned_walk(const T& x, const T& y, const T& z, unsigned parallel,
                               Accept accept, Emit emit) {
  const SinkTriangle<T> sink = find_sink(x, y, z);
  auto locals = parallel_walk<T, Local>(sink_roots(sink), parallel, accept, emit);
  for (std::size_t i = 0; i < 3; ++i) {
    if (accept(sink.traces[i])) emit(locals[0], sink.classes[i], sink.traces[i]);
  }
  return locals;
}

double checked_trace_bound(double max_length) {
  if (!(max_length > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "length cutoff must be positive");
  }
  const double bound = trace_bound(max_length);
  if (!std::isfinite(bound)) {
    throw Error(ErrorCode::Overflow, "length cutoff " + format_sig10(max_length) +
                                         " exceeds the floating trace range; use exact mode");
  }
  return bound;
}

double exact_length(const BigInt& trace) {
  const BigInt mag = boost::multiprecision::abs(trace);
  if (mag < BigInt(1) << 1000) return hyperbolic_length(mag.convert_to<double>());
  // 2 arccosh(t/2) = 2 log t - O(t^-2).
  const auto shift = boost::multiprecision::msb(mag) - 60;
  const double head = BigInt(mag >> shift).convert_to<double>();
  return 2.0 * (std::log(head) + static_cast<double>(shift) * std::log(2.0));
}

// floor(2 cosh(L/2)) as an integer, valid for any L.
BigInt exact_trace_bound(double max_length) {
  if (!(max_length > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "length cutoff must be positive");
  }
  const unsigned digits = static_cast<unsigned>(max_length / 2.0 / std::log(10.0)) + 40;
  ScopedPrecision precision(digits);
  HighFloat half = HighFloat(max_length) / 2;
  HighFloat bound = floor(exp(half) + exp(-half));
  std::string text = bound.str(0, std::ios_base::fixed);
  text = text.substr(0, text.find('.'));
  return BigInt(text);
}

}  // namespace

HomologyClass mediant(HomologyClass a, HomologyClass b) {
  const std::int64_t det = a.m * b.n - a.n * b.m;
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::NotNeighbors, "determinant " + std::to_string(det));
  }
  return a + b;
}

FrickeTriple quadrant2_seed(const FrickeTriple& t) { return {t.x, t.y, t.x * t.y - t.z}; }

HighTriple to_high(const FrickeTriple& t) {
  HighTriple h;
  h.x = t.x;
  h.y = t.y;
  const HighFloat p = h.x * h.y;
  const HighFloat sum_sq = h.x * h.x + h.y * h.y;
  HighFloat disc = p * p - 4 * sum_sq;
  if (disc < 0) disc = 0;
  const HighFloat z_plus = (p + sqrt(disc)) / 2;
  const HighFloat z_minus = sum_sq / z_plus;
  const HighFloat given = t.z;
  h.z = abs(z_plus - given) < abs(z_minus - given) ? z_plus : z_minus;
  h.z2 = p - h.z;
  return h;
}

double slope_trace(const FrickeTriple& triple, const Slope& slope, TraceRule rule) {
  const double z2 = triple.x * triple.y - triple.z;
  if (rule == nullptr) return slope_trace_generic(triple.x, triple.y, triple.z, z2, slope);
  return slope_trace_generic(triple.x, triple.y, triple.z, z2, slope, rule);
}

std::vector<SpectrumEntry> enumerate_spectrum(const FrickeTriple& triple, double max_length,
                                              const EnumerateOptions& options) {
  require_valid_triple(triple);
  const double bound = checked_trace_bound(max_length);
  using Local = std::vector<SpectrumEntry>;
  auto locals = pruned_walk<double, Local>(
      triple.x, triple.y, triple.z, options.parallel,
      [bound](double t) { return t <= bound; },
      [](Local& out, const HomologyClass& h, double t) {
        out.push_back({Slope(h.m, h.n), t, hyperbolic_length(t)});
      });

  std::vector<SpectrumEntry> entries;
  for (auto& local : locals) entries.insert(entries.end(), local.begin(), local.end());
  sort_spectrum(entries);
  return entries;
}

std::uint64_t count_spectrum(const FrickeTriple& triple, double max_length,
                             const EnumerateOptions& options) {
  require_valid_triple(triple);
  const double bound = checked_trace_bound(max_length);
  auto locals = pruned_walk<double, std::uint64_t>(
      triple.x, triple.y, triple.z, options.parallel,
      [bound](double t) { return t <= bound; },
      [](std::uint64_t& n, const HomologyClass&, double) { ++n; });
  std::uint64_t total = 0;
  for (auto n : locals) total += n;
  return total;
}

std::vector<ExactSpectrumEntry> exact_spectrum(const BigInt& x, const BigInt& y, const BigInt& z,
                                               double max_length,
                                               const EnumerateOptions& options) {
  if (x <= 2 || y <= 2 || z <= 2 || x * x + y * y + z * z != x * y * z) {
    throw Error(ErrorCode::InvalidTriple, "integer triple (" + x.str() + ", " + y.str() + ", " +
                                              z.str() + ") is not a cusped Fricke triple");
  }
  const BigInt bound = exact_trace_bound(max_length);
  using Local = std::vector<ExactSpectrumEntry>;
  auto locals = pruned_walk<BigInt, Local>(
      x, y, z, options.parallel,
      [&bound](const BigInt& t) { return t <= bound; },
      [](Local& out, const HomologyClass& h, const BigInt& t) {
        out.push_back({Slope(h.m, h.n), t, exact_length(t)});
      });

  std::vector<ExactSpectrumEntry> entries;
  for (auto& local : locals) {
    entries.insert(entries.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
  }
  sort_spectrum(entries);
  return entries;
}

std::vector<ExactSpectrumEntry> exact_markoff_spectrum(double max_length,
                                                       const EnumerateOptions& options) {
  return exact_spectrum(3, 3, 3, max_length, options);
}

std::vector<SpectrumEntry> enumerate_by_word_length(const FrickeTriple& triple,
                                                    std::int64_t max_word_length,
                                                    TraceRule rule) {
  require_valid_triple(triple);
  std::vector<SpectrumEntry> entries;
  if (max_word_length < 1) return entries;
  entries.push_back({Slope(1, 0), triple.x, hyperbolic_length(triple.x)});
  entries.push_back({Slope(0, 1), triple.y, hyperbolic_length(triple.y)});
  auto visit = [&](const HomologyClass& h, double t, int) {
    const std::int64_t len = (h.m < 0 ? -h.m : h.m) + (h.n < 0 ? -h.n : h.n);
    if (len > max_word_length) return false;
    entries.push_back({Slope(h.m, h.n), t, hyperbolic_length(t)});
    return true;
  };
  const auto seed2 = quadrant2_seed(triple);
  for (auto& root : tree_roots(triple.x, triple.y, triple.z, seed2.z)) {
    if (rule == nullptr) {
      walk_tree(std::move(root), visit);
    } else {
      walk_tree(std::move(root), visit, rule);
    }
  }
  sort_spectrum(entries);
  return entries;
}

}  // namespace ptorus
