#pragma once

// Quadratic characters, truncated Euler products and the singular series of
// the n^2 + 1 heuristic.

#include <cstdint>
#include <functional>

namespace sqpairs {

// Kronecker symbol (D/n) for any D and n >= 0.
int kronecker(std::int64_t d, std::uint64_t n);

// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(std::uint64_t a, std::uint64_t n);

struct QuadChar {
  std::uint64_t a = 1;
  // a when a = 3 (mod 4), 4a otherwise.
  std::uint64_t conductor = 4;
};

// Throws ArgumentError unless a >= 1 is squarefree.
QuadChar make_quad_char(std::uint64_t a);

// chi_a: odd primes p map to (-a/p); chi_a(2) = 1 if a = 3 (mod 4), else 0;
// extended completely multiplicatively (chi_a(0) = 0).
//
// For a = 3 (mod 8) this differs at even n from the primitive character of
// conductor a, whose value at 2 is -1; see primitive_char.
int chi_a(std::uint64_t a, std::uint64_t n);

// Kronecker symbol of the fundamental discriminant -a or -4a: the primitive
// real character with the conductor of make_quad_char(a). Agrees with chi_a
// on odd n.
int primitive_char(std::uint64_t a, std::uint64_t n);

struct EulerProductResult {
  double value = 1.0;
  double y = 0.0;
  double z = 0.0;
  std::uint64_t terms = 0;
};

// Cuts above this are refused with ResourceError.
inline constexpr std::uint64_t kMaxEulerPrime = 10'000'000'000ull;

// prod over primes y < p <= z of (1 - chi(p)/p). Products with z > 1e6 are
// accumulated in log space.
EulerProductResult euler_product(const std::function<int(std::uint64_t)>& chi, double y, double z);

// prod_{y < p <= z} (1 - (-a/p)/p) for squarefree a; requires 2 <= y < z.
EulerProductResult euler_product(std::uint64_t a, double y, double z);

struct SeriesResult {
  double value = 1.0;
  std::uint64_t prime_limit = 2;
  std::uint64_t terms = 0;
  // Bound on the second-order part of the log-tail, sum_{n > limit} 2/(n-1)^2.
  // The first-order part sum_{p > limit} (-1/p)/(p-1) converges only
  // conditionally and is not bounded by this number.
  double tail_estimate = 0.0;
};

// Partial product over 2 < p <= prime_limit of 1 - (-1/p)/(p - 1).
SeriesResult singular_series(std::uint64_t prime_limit);

// int_2^upper dt / log t by adaptive Gauss-Kronrod (relative tolerance 1e-9).
double log_integral_from_2(double upper);

// (1/2) * singular_series(prime_limit) * int_2^sqrt(x) dt / log t.
// Throws ArgumentError for x < 4.
double landau_heuristic(double x, std::uint64_t prime_limit = 1'000'000);

// #{p <= x prime : p - 1 is a perfect square}.
std::uint64_t landau_count(std::uint64_t x);

}  // namespace sqpairs
