#pragma once

// Per-integer arithmetic data over contiguous ranges: primality, smallest
// prime factor, Euler phi, Moebius mu, omega and the squarefree part.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace sqpairs {

__extension__ typedef unsigned __int128 uint128;

struct SieveConfig {
  std::uint64_t segment_size = std::uint64_t{1} << 22;
  // Largest hi - lo a single SieveTable may cover.
  std::uint64_t max_table_size = std::uint64_t{1} << 26;
  unsigned threads = 1;
};

// Immutable table for n in [lo, hi).
class SieveTable {
 public:
  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return hi_; }
  std::uint64_t size() const { return hi_ - lo_; }
  bool contains(std::uint64_t n) const { return n >= lo_ && n < hi_; }

  // spf(1) is 1 by convention.
  std::uint64_t spf(std::uint64_t n) const { return spf_[index(n)]; }
  std::uint64_t phi(std::uint64_t n) const { return phi_[index(n)]; }
  int mu(std::uint64_t n) const { return mu_[index(n)]; }
  std::uint64_t sqf(std::uint64_t n) const { return sqf_[index(n)]; }
  unsigned omega(std::uint64_t n) const { return omega_[index(n)]; }
  bool is_prime(std::uint64_t n) const { return n >= 2 && spf(n) == n; }

  std::span<const std::uint64_t> spf_values() const { return spf_; }
  std::span<const std::uint64_t> phi_values() const { return phi_; }
  std::span<const std::int8_t> mu_values() const { return mu_; }
  std::span<const std::uint64_t> sqf_values() const { return sqf_; }
  std::span<const std::uint8_t> omega_values() const { return omega_; }

  // Prime factorization by repeated spf lookups; requires lo() == 1.
  std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) const;

  friend bool operator==(const SieveTable&, const SieveTable&) = default;

 private:
  friend SieveTable build_sieve(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config);

  std::size_t index(std::uint64_t n) const;

  std::uint64_t lo_ = 1;
  std::uint64_t hi_ = 1;
  std::vector<std::uint64_t> spf_;
  std::vector<std::uint64_t> phi_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint64_t> sqf_;
  std::vector<std::uint8_t> omega_;
};

// Throws ArgumentError when lo >= hi or lo == 0, ResourceError when
// hi - lo exceeds config.max_table_size.
SieveTable build_sieve(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config = {});

// Deterministic for all 64-bit n (Miller-Rabin with the first twelve prime bases).
bool is_prime(std::uint64_t n);

// All primes p <= n.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Primality flags for [lo, hi) given every prime up to isqrt(hi - 1).
// flags[i] != 0 iff lo + i is prime.
void mark_primes_in_segment(std::uint64_t lo, std::uint64_t hi,
                            std::span<const std::uint64_t> base_primes,
                            std::vector<std::uint8_t>& flags);

// Calls fn(p) for every prime lo <= p < hi in increasing order.
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn,
                    std::uint64_t segment_size = std::uint64_t{1} << 20);

// Bit-per-odd-number primality lookup for n <= limit.
class PrimeBitmap {
 public:
  explicit PrimeBitmap(std::uint64_t limit);
  std::uint64_t limit() const { return limit_; }
  bool test(std::uint64_t n) const {
    if (n < 2 || n > limit_) return false;
    if ((n & 1) == 0) return n == 2;
    std::uint64_t i = n >> 1;
    return (bits_[i >> 6] >> (i & 63)) & 1;
  }

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;
};

struct PrimeCountQuery {
  std::uint64_t x = 1;
  std::uint64_t k = 1;
  std::uint64_t b = 1;
};

// pi(x; k, b). Throws ArgumentError unless 1 <= b <= k and gcd(b, k) = 1.
std::uint64_t count_primes_in_progression(const PrimeCountQuery& query);

// The unique squarefree a with n = a * m^2. Throws ArgumentError for n = 0.
std::uint64_t squarefree_part(std::uint64_t n);

// Trial-division factorization; used for small inputs and k-fold classes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);
std::uint64_t isqrt(uint128 n);
std::uint64_t icbrt(std::uint64_t n);
// Largest r with r^k <= n.
std::uint64_t iroot(uint128 n, unsigned k);
bool is_perfect_square(uint128 n);
bool is_perfect_power(uint128 n, unsigned k);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace sqpairs
