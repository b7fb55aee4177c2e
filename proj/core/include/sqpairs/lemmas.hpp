#pragma once

// Numerical checks of the auxiliary bounds and identities behind the pair
// count estimates. Each check returns LemmaReport records.
//
// Checks of the form "lhs << rhs" carry no explicit constant; for those
// `pass` only means the ratio is finite (and, over a grid, not growing).
// Checks marked theorem_grade are exact statements where any failure is a bug.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sqpairs {

struct LemmaReport {
  std::string lemma_id;
  std::string params;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = false;
  bool theorem_grade = false;
  std::string notes;

  friend bool operator==(const LemmaReport&, const LemmaReport&) = default;
};

// Upper bound on n/phi(n) for n >= 3 (Rosser-Schoenfeld).
double totient_ratio_bound(double n);

// Rigorous bound on sum_{n > cut} (n/phi(n))^power / n^2, cut >= 3.
double totient_tail_bound(double cut, int power);

// True when the last ratio exceeds twice the median.
bool growth_flag(std::span<const double> ratios);

struct PhiSumOptions {
  std::uint64_t truncation_factor = 1000;
  std::vector<std::uint64_t> divisor_sample = {1,  2,  3,  4,  5,   6,   8,   9,   12,  16,  18,  25,
                                               30, 36, 49, 60, 64, 100, 210, 360, 500, 720, 1000};
};

// (a) sum_{n<=x} 1/phi(n) against log x; (b) x * sum_{x<n<=X} 1/phi(n^2);
// (c) max over sampled d of sum_{x<n<=X, d | n^2} 1/phi(n^2) / (d^(1/2) / (phi(d) x)).
std::array<LemmaReport, 3> check_phi_sums(std::uint64_t x, const PhiSumOptions& options = {});

// max_{2<=n<=n_max} S(n)/n with S(n) = sum_{m<n} (n^2-m^2)/phi(n^2-m^2).
LemmaReport check_quotient_sum(std::uint64_t n_max);

// S(n) for a single n (exposed for tests).
double quotient_sum(std::uint64_t n);

struct BrunTitchmarshSample {
  enum class Mode { automatic, exhaustive, random };
  Mode mode = Mode::automatic;
  // Random moduli drawn in random mode (automatic switches to random above 1e4).
  std::uint64_t count = 200;
  std::uint64_t seed = 0x5eedULL;
};

// pi(x;k,b) < 2x / (phi(k) log(x/k)) for every sampled 1 <= k < x, (b,k) = 1.
LemmaReport check_brun_titchmarsh(std::uint64_t x, const BrunTitchmarshSample& sample = {});

// For k <= k_max and 1 <= b < k coprime (b = 1 when k = 1):
// sum_{a <= x/k} mu(a)^2 1_P(ak + b) > x / (100 phi(k) log x). One report per k.
// Requires x >= 1000 and k_max^3 <= x.
std::vector<LemmaReport> check_squarefree_progressions(std::uint64_t x, std::uint64_t k_max);

// sum_{3<p<=limit} 1/(p(p-1)) + 1/limit < 0.1065, limit >= 5.
LemmaReport check_tail_prime_sum(std::uint64_t prime_limit);

struct CharSumOptions {
  std::uint64_t max_x = 1'000'000;
  bool force = false;
};

// [0]: sum_{a<=x} a mu(a)^2 / phi(a)^2 prod_{2<p<=sqrt x} (1 - (-a/p)/p)^2 vs log x.
// [1]: y * sum_{a>y} a^2/phi(a)^4 truncated at 1000 y, y = min(x, 1e4).
std::array<LemmaReport, 2> check_char_sum(std::uint64_t x, const CharSumOptions& options = {});

// The full sum in report [0], exposed for tests.
double char_sum(std::uint64_t x);

// #{b mod p : a b^2 + 1 = 0 mod p} by enumeration.
unsigned rho(std::uint64_t a, std::uint64_t p);
// #{b mod p : (b m^2 + 1)(b n^2 + 1) = 0 mod p} by enumeration.
unsigned rho_pair(std::uint64_t m, std::uint64_t n, std::uint64_t p);
// 2 if p does not divide mn(m^2 - n^2); 0 if p | gcd(m, n); else 1.
unsigned rho_pair_formula(std::uint64_t m, std::uint64_t n, std::uint64_t p);

// (a) rho(a,p) = 1 + (-a/p) for odd p not dividing a and 0 for p | a,
// over squarefree a <= a_max and odd primes p <= p_max;
// (b) rho_pair = rho_pair_formula for all 1 <= m < n <= mn_max, primes p <= p_max.
LemmaReport check_rho_identities(std::uint64_t a_max, std::uint64_t p_max, std::uint64_t mn_max = 100);

// n = sum_{m | n} mu(m)^2 phi(n)/phi(m) (exact integers) for n <= n_max.
LemmaReport check_mu_phi_identity(std::uint64_t n_max);
// sum_{d | k} mu(d)^2 = 2^omega(k) for k <= n_max.
LemmaReport check_omega_identity(std::uint64_t n_max);
// phi(n^2) = n phi(n) for n <= n_max.
LemmaReport check_phi_square_identity(std::uint64_t n_max);

struct ArtinResult {
  double value = 1.0;
  // The infinite product lies in [lower_bound, value].
  double lower_bound = 1.0;
  std::uint64_t prime_cut = 0;
  std::uint64_t terms = 0;
};

// prod_{p <= cut} (1 - 1/(p(p-1))) * prod_{p | k} (1 - 1/(p^3 - p^2 - p)).
ArtinResult artin_local_constant(std::uint64_t k, std::uint64_t prime_cut = 1'000'000);

}  // namespace sqpairs
