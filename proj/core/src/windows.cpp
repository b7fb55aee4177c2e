#include "sqpairs/windows.hpp"

#include <cmath>
#include <string>

#include "sqpairs/errors.hpp"
#include "sqpairs/parallel.hpp"

namespace sqpairs {

using u64 = std::uint64_t;
using u128 = uint128;

namespace {

// flags[a] != 0 iff a is squarefree, for a <= limit.
std::vector<std::uint8_t> squarefree_flags(u64 limit) {
  std::vector<std::uint8_t> flags(limit + 1, 1);
  flags[0] = 0;
  for (u64 p : primes_up_to(isqrt(limit))) {
    const u64 sq = p * p;
    for (u64 m = sq; m <= limit; m += sq) flags[m] = 0;
  }
  return flags;
}

bool within_sixth_root(u64 x, u64 y) { return y <= iroot(x, 6); }

template <class IsPrime>
WindowStat compute_stats(u64 x, const DyadicWindow& w, std::span<const std::uint8_t> sqfree,
                         IsPrime&& prime) {
  WindowStat s;
  s.y = w.y;
  s.outside_sixth_root = !within_sixth_root(x, w.y);
  for (u64 a = 1; a <= w.a_limit; ++a) {
    if (!sqfree[a]) continue;
    u64 n_count = 0;
    for (u64 n = w.n_lo; n < w.n_hi; ++n) {
      if (prime(a * n * n + 1)) ++n_count;
    }
    s.sum_n += n_count;
    s.sum_n2 += n_count * n_count;
  }
  s.pair_contrib = s.sum_n2 - s.sum_n;
  const double y2 = static_cast<double>(w.y) * static_cast<double>(w.y);
  const double sn = static_cast<double>(s.sum_n);
  s.cs_bound = y2 / static_cast<double>(x) * sn * sn - sn;
  const u128 lhs = static_cast<u128>(w.y) * w.y * s.sum_n * s.sum_n;
  const u128 rhs = static_cast<u128>(x) * s.sum_n2;
  s.cauchy_schwarz_holds = lhs <= rhs;
  return s;
}

}  // namespace

DyadicWindow make_window(u64 x, u64 y) {
  if (y < 2) throw ArgumentError("dyadic window: y must be >= 2");
  const u128 y2 = static_cast<u128>(y) * y;
  if (y2 > x) throw ArgumentError("dyadic window: x / y^2 < 1");
  DyadicWindow w;
  w.y = y;
  w.n_lo = (y + 1) / 2;
  w.n_hi = y;
  w.a_limit = static_cast<u64>(x / y2);
  return w;
}

u64 window_count(u64 a, const DyadicWindow& window) {
  if (!is_squarefree(a)) throw ArgumentError("window_count: a = " + std::to_string(a) + " is not squarefree");
  u64 count = 0;
  for (u64 n = window.n_lo; n < window.n_hi; ++n) {
    if (is_prime(a * n * n + 1)) ++count;
  }
  return count;
}

WindowStat window_stats(u64 x, u64 y) {
  const DyadicWindow w = make_window(x, y);
  const auto sqfree = squarefree_flags(w.a_limit);
  return compute_stats(x, w, sqfree, [](u64 v) { return is_prime(v); });
}

const char* to_string(WindowPolicy policy) {
  switch (policy) {
    case WindowPolicy::log_squared:
      return "log-squared";
    case WindowPolicy::sixth_root:
      return "sixth-root";
    case WindowPolicy::sqrt:
      return "sqrt";
  }
  return "log-squared";
}

WindowPolicy parse_window_policy(const std::string& name) {
  if (name == "log-squared") return WindowPolicy::log_squared;
  if (name == "sixth-root") return WindowPolicy::sixth_root;
  if (name == "sqrt") return WindowPolicy::sqrt;
  throw ArgumentError("unknown window policy '" + name + "' (expected log-squared, sixth-root or sqrt)");
}

std::vector<u64> window_collection(u64 x, WindowPolicy policy) {
  std::vector<u64> ys;
  const double log_sq = std::pow(std::log(static_cast<double>(x)), 2);
  for (u64 y = 2; static_cast<u128>(y) * y <= x; y *= 2) {
    const bool sixth = within_sixth_root(x, y);
    switch (policy) {
      case WindowPolicy::log_squared:
        if (sixth && static_cast<double>(y) >= log_sq) ys.push_back(y);
        break;
      case WindowPolicy::sixth_root:
        if (sixth) ys.push_back(y);
        break;
      case WindowPolicy::sqrt:
        ys.push_back(y);
        break;
    }
    if (y > (u64{1} << 62)) break;
  }
  return ys;
}

LowerBoundResult lower_bound_construction(u64 x, WindowPolicy policy, unsigned threads) {
  if (x < 16) throw ArgumentError("lower_bound_construction: x must be >= 16");
  LowerBoundResult out;
  out.x = x;
  out.policy = policy;
  const auto ys = window_collection(x, policy);
  out.empty_collection = ys.empty();
  if (ys.empty()) return out;

  const auto sqfree = squarefree_flags(x / (ys.front() * ys.front()));
  const PrimeBitmap primes(x + 1);
  out.windows.resize(ys.size());
  parallel_for(ys.size(), threads, [&](u64 i) {
    out.windows[i] = compute_stats(x, make_window(x, ys[i]), sqfree,
                                   [&primes](u64 v) { return primes.test(v); });
  });
  for (const auto& w : out.windows) out.aggregate += w.pair_contrib;
  out.normalized = static_cast<double>(out.aggregate) * std::log(static_cast<double>(x)) /
                   static_cast<double>(x);
  return out;
}

RatioSeries ratio_scan(std::span<const u64> grid, const CountConfig& config) {
  if (grid.empty()) throw ArgumentError("ratio_scan: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 5) throw ArgumentError("ratio_scan: grid values must be >= 5");
    if (i > 0 && grid[i] <= grid[i - 1]) throw ArgumentError("ratio_scan: grid must be strictly increasing");
  }
  const auto counts = pair_counts_at(grid, config);
  RatioSeries series;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = static_cast<double>(grid[i]);
    const double ratio = static_cast<double>(counts[i]) * std::log(x) / x;
    series.points.push_back(RatioPoint{grid[i], counts[i], ratio});
  }
  series.min_ratio = series.max_ratio = series.points.front().ratio;
  for (const auto& p : series.points) {
    series.min_ratio = std::min(series.min_ratio, p.ratio);
    series.max_ratio = std::max(series.max_ratio, p.ratio);
  }
  series.spread = series.min_ratio > 0 ? series.max_ratio / series.min_ratio : INFINITY;
  return series;
}

UpperSplit upper_split(u64 x, const CountConfig& config) {
  if (x > config.max_x && !config.force) {
    throw ResourceError("upper_split: x = " + std::to_string(x) + " exceeds ceiling");
  }
  UpperSplit out;
  if (x == 0) return out;
  const auto sqfree = squarefree_flags(x);
  const PrimeBitmap primes(x + 1);
  const u128 x2 = static_cast<u128>(x) * x;
  for (u64 a = 1; a <= x; ++a) {
    if (!sqfree[a]) continue;
    const u64 m_max = isqrt(x / a);
    u64 g = 0;
    for (u64 m = 1; m <= m_max; ++m) {
      if (primes.test(a * m * m + 1)) ++g;
    }
    const u64 pairs = g * (g - (g > 0 ? 1 : 0)) / 2;
    if (static_cast<u128>(a) * a * a <= x2) {
      out.s1 += pairs;
    } else {
      out.s2 += pairs;
    }
  }
  return out;
}

}  // namespace sqpairs
