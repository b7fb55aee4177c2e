#pragma once

// Dyadic-window lower-bound construction and the kernel split of S(x + 1).
//
// A window I_y is the integer interval [ceil(y/2), y). For squarefree
// a <= x / y^2, N(a) counts n in I_y with a n^2 + 1 prime. Pairs m != n in one
// window with the same a are solution pairs with both primes <= x, so
// sum_a mu(a)^2 (N(a)^2 - N(a)) over disjoint windows never exceeds S(x + 1).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sqpairs/pair_counter.hpp"

namespace sqpairs {

struct DyadicWindow {
  std::uint64_t y = 2;
  std::uint64_t n_lo = 1;  // ceil(y / 2)
  std::uint64_t n_hi = 2;  // y, exclusive
  std::uint64_t a_limit = 1;  // floor(x / y^2)

  std::uint64_t length() const { return n_hi - n_lo; }
};

// Throws ArgumentError when y < 2 or x / y^2 < 1.
DyadicWindow make_window(std::uint64_t x, std::uint64_t y);

// #{n in window : a n^2 + 1 prime}; a must be squarefree.
std::uint64_t window_count(std::uint64_t a, const DyadicWindow& window);

struct WindowStat {
  std::uint64_t y = 0;
  std::uint64_t sum_n = 0;
  std::uint64_t sum_n2 = 0;
  std::uint64_t pair_contrib = 0;
  // (y^2 / x) sum_n^2 - sum_n.
  double cs_bound = 0.0;
  // Exact form of cs_bound <= pair_contrib: y^2 sum_n^2 <= x sum_n2.
  bool cauchy_schwarz_holds = true;
  bool outside_sixth_root = false;
};

WindowStat window_stats(std::uint64_t x, std::uint64_t y);

enum class WindowPolicy {
  // {[2^(j-1), 2^j) : (log x)^2 <= 2^j <= x^(1/6)}
  log_squared,
  // every 2 <= 2^j <= x^(1/6)
  sixth_root,
  // every 2 <= 2^j with 2^(2j) <= x
  sqrt,
};

const char* to_string(WindowPolicy policy);
WindowPolicy parse_window_policy(const std::string& name);

// Window parameters y = 2^j selected by the policy, increasing.
std::vector<std::uint64_t> window_collection(std::uint64_t x, WindowPolicy policy);

struct LowerBoundResult {
  std::uint64_t x = 0;
  WindowPolicy policy = WindowPolicy::log_squared;
  std::vector<WindowStat> windows;
  std::uint64_t aggregate = 0;
  // aggregate * log(x) / x
  double normalized = 0.0;
  bool empty_collection = false;
};

// Throws ArgumentError for x < 16.
LowerBoundResult lower_bound_construction(std::uint64_t x, WindowPolicy policy = WindowPolicy::log_squared,
                                          unsigned threads = 1);

struct RatioPoint {
  std::uint64_t x = 0;
  std::uint64_t s_x = 0;
  double ratio = 0.0;
};

struct RatioSeries {
  std::vector<RatioPoint> points;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  // max_ratio / min_ratio; 1 for a singleton grid.
  double spread = 1.0;
};

// Throws ArgumentError unless the grid is strictly increasing with entries >= 5.
RatioSeries ratio_scan(std::span<const std::uint64_t> grid, const CountConfig& config = {});

struct UpperSplit {
  // Unordered solution pairs with primes <= x + 1 and kernel a <= x^(2/3).
  std::uint64_t s1 = 0;
  // Same with x^(2/3) < a <= x.
  std::uint64_t s2 = 0;
};

// Enumerates squarefree a <= x and m <= sqrt(x / a) with a m^2 + 1 prime.
UpperSplit upper_split(std::uint64_t x, const CountConfig& config = {});

}  // namespace sqpairs
