#pragma once

// Exact counts of ordered pairs of distinct primes p, q <= x with
// (p - 1)(q - 1) a perfect square, and the shifted / k-fold variants.
//
// Two shifted primes multiply to a square iff their squarefree kernels agree,
// so every count reduces to grouping primes by squarefree_part(p + shift).

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sqpairs/arith.hpp"

namespace sqpairs {

struct CountConfig {
  SieveConfig sieve{};
  // Ceiling on x for sieve-backed counting.
  std::uint64_t max_x = 100'000'000;
  bool force = false;
};

struct KernelEntry {
  std::uint64_t kernel = 1;
  std::uint64_t prime = 2;
  friend auto operator<=>(const KernelEntry&, const KernelEntry&) = default;
};

// One record per prime p <= x with p + shift >= 1, holding
// squarefree_part(p + shift); sorted by (kernel, prime). Deterministic for
// every thread count.
std::vector<KernelEntry> collect_shifted_kernels(std::uint64_t x, std::int64_t shift,
                                                 const CountConfig& config = {});

struct PairGroupIndex {
  std::uint64_t x = 0;
  // (kernel, g_a) sorted by kernel.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> groups;
  // Filled only when members were requested (x <= 1e6).
  std::vector<KernelEntry> members;

  std::uint64_t prime_count() const;
  // sum over kernels of g_a (g_a - 1).
  std::uint64_t ordered_pairs() const;
  std::vector<std::uint64_t> members_of(std::uint64_t kernel) const;
};

inline constexpr std::uint64_t kMaxVerboseX = 1'000'000;

PairGroupIndex build_pair_groups(std::uint64_t x, const CountConfig& config = {},
                                 bool keep_members = false);

struct PairCountReport {
  std::uint64_t x = 0;
  std::uint64_t s_x = 0;
  std::uint64_t s_prime_x = 0;
  std::uint64_t group_count = 0;
  std::uint64_t largest_group_kernel = 0;
  std::uint64_t largest_group_size = 0;
  double elapsed_seconds = 0.0;

  std::uint64_t unordered_pairs() const { return s_x / 2; }
  friend bool operator==(const PairCountReport&, const PairCountReport&) = default;
};

// S(x) by one sieve pass grouped on squarefree_part(p - 1), plus S'(x).
// Largest-group ties resolve to the smallest kernel.
PairCountReport count_pairs_grouped(std::uint64_t x, const CountConfig& config = {});

// S(x) at every grid point (any order) from a single pass up to max(grid).
std::vector<std::uint64_t> pair_counts_at(std::span<const std::uint64_t> grid,
                                          const CountConfig& config = {});

inline constexpr std::uint64_t kBruteforceGuard = 100'000;

// Quadratic check of every ordered pair with an exact integer square root.
// Throws ArgumentError when x > 1e5 unless force is set.
std::uint64_t count_pairs_bruteforce(std::uint64_t x, bool force = false);

// S'(x): integers n <= x with n = pq for a solution pair.
std::uint64_t count_products(std::uint64_t x);

// Ordered distinct pairs p, q <= x with (p + b)(q + b) a perfect square.
// Primes with p + b < 1 are skipped. Throws ArgumentError for b = 0.
std::uint64_t count_shifted_pairs(std::uint64_t x, std::int64_t b, const CountConfig& config = {});

struct KfoldOptions {
  std::uint64_t max_work = 200'000'000;
  bool force = false;
};

// Unordered k-sets of distinct primes <= x whose product of p - 1 is a
// perfect k-th power, for k in [2, 5].
std::uint64_t count_kfold(std::uint64_t x, unsigned k, const KfoldOptions& options = {});

}  // namespace sqpairs
