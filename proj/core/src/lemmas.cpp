#include "sqpairs/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "sqpairs/arith.hpp"
#include "sqpairs/characters.hpp"
#include "sqpairs/errors.hpp"
#include "sqpairs/numeric.hpp"

namespace sqpairs {

using u64 = std::uint64_t;

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr u64 kStreamSegment = u64{1} << 20;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

LemmaReport make_report(std::string id, std::string params, double lhs, double rhs) {
  LemmaReport r;
  r.lemma_id = std::move(id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = rhs != 0.0 ? lhs / rhs : 0.0;
  return r;
}

// Streams SieveTables over [lo, hi) in bounded segments.
template <class Fn>
void for_each_table(u64 lo, u64 hi, Fn&& fn) {
  SieveConfig config;
  config.segment_size = kStreamSegment;
  for (u64 a = lo; a < hi;) {
    const u64 b = (hi - a > kStreamSegment) ? a + kStreamSegment : hi;
    fn(build_sieve(a, b, config));
    a = b;
  }
}

}  // namespace

double totient_ratio_bound(double n) {
  const double ll = std::log(std::log(n));
  return std::exp(kEulerGamma) * ll + 2.50637 / ll;
}

double totient_tail_bound(double cut, int power) {
  if (cut < 3.0) throw ArgumentError("totient_tail_bound: cut must be >= 3");
  // Block (c 2^j, c 2^(j+1)]: sum 1/n^2 < 1/(c 2^j), and the bound
  // function is unimodal, so its block maximum sits at an endpoint.
  CompensatedSum total;
  double left = cut;
  for (int j = 0; j < 400; ++j) {
    const double right = 2.0 * left;
    const double f = std::max(totient_ratio_bound(left), totient_ratio_bound(right));
    const double term = std::pow(f, power) / left;
    total += term;
    if (term < 1e-30 * total.value()) break;
    left = right;
  }
  return total.value();
}

bool growth_flag(std::span<const double> ratios) {
  if (ratios.size() < 2) return false;
  std::vector<double> sorted(ratios.begin(), ratios.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double median = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  return ratios.back() > 2.0 * median;
}

std::array<LemmaReport, 3> check_phi_sums(u64 x, const PhiSumOptions& options) {
  if (x < 2) throw ArgumentError("check_phi_sums: x must be >= 2");
  const u64 big = x * std::max<u64>(options.truncation_factor, 1);
  const std::string base = "x=" + std::to_string(x) + " X=" + std::to_string(big);

  CompensatedSum inverse_phi;
  CompensatedSum square_tail;
  const auto& sample = options.divisor_sample;
  std::vector<CompensatedSum> divisor_tails(sample.size());
  for_each_table(1, big + 1, [&](const SieveTable& t) {
    for (u64 n = t.lo(); n < t.hi(); ++n) {
      const double phi = static_cast<double>(t.phi(n));
      if (n <= x) {
        inverse_phi += 1.0 / phi;
        continue;
      }
      const double term = 1.0 / (static_cast<double>(n) * phi);
      square_tail += term;
      for (std::size_t i = 0; i < sample.size(); ++i) {
        const u64 d = sample[i];
        const u64 r = n % d;
        if (r * r % d == 0) divisor_tails[i] += term;
      }
    }
  });

  const double logx = std::log(static_cast<double>(x));
  auto a = make_report("phi-sums/inverse-phi", base, inverse_phi.value(), logx);
  a.pass = std::isfinite(a.ratio);
  a.notes = "sum_{n<=x} 1/phi(n) vs log x";

  const double tail = totient_tail_bound(static_cast<double>(big), 1);
  const double xd = static_cast<double>(x);
  auto b = make_report("phi-sums/square-tail", base, xd * square_tail.value(), 1.0);
  b.pass = std::isfinite(b.ratio) && b.lhs > 0.0;
  b.notes = "x*sum_{x<n<=X} 1/phi(n^2); truncation error x*tail <= " + fmt(xd * tail) +
            " (Rosser-Schoenfeld n/phi(n) bound, dyadic blocks)";

  auto c = make_report("phi-sums/divisor-tail", base, 0.0, 0.0);
  c.ratio = -1.0;
  u64 worst_d = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const u64 d = sample[i];
    const double rhs = std::sqrt(static_cast<double>(d)) / (static_cast<double>(euler_phi(d)) * xd);
    const double lhs = divisor_tails[i].value();
    if (lhs / rhs > c.ratio) {
      c.ratio = lhs / rhs;
      c.lhs = lhs;
      c.rhs = rhs;
      worst_d = d;
    }
  }
  c.params = base + " d_sample=" + std::to_string(sample.size());
  c.pass = c.ratio >= 0.0 && std::isfinite(c.ratio);
  c.notes = "max over sampled d of tail/(d^(1/2)/(phi(d)x)); worst d=" + std::to_string(worst_d);
  return {a, b, c};
}

double quotient_sum(u64 n) {
  CompensatedSum s;
  for (u64 m = 1; m < n; ++m) {
    const u64 v = n * n - m * m;
    s += static_cast<double>(v) / static_cast<double>(euler_phi(v));
  }
  return s.value();
}

LemmaReport check_quotient_sum(u64 n_max) {
  if (n_max < 2) throw ArgumentError("check_quotient_sum: n_max must be >= 2");
  // n^2 - m^2 = (n - m)(n + m); phi(uv) = phi(u) phi(v) g / phi(g), g = gcd(u, v).
  const SieveTable t = build_sieve(1, 2 * n_max + 1);
  double best = -1.0;
  u64 best_n = 2;
  double best_sum = 0.0;
  std::vector<double> prefix_max;
  double running = 0.0;
  u64 next_mark = 4;
  for (u64 n = 2; n <= n_max; ++n) {
    CompensatedSum s;
    for (u64 m = 1; m < n; ++m) {
      const u64 u = n - m;
      const u64 v = n + m;
      const u64 g = std::gcd(u, v);
      const double num = static_cast<double>(u) * static_cast<double>(v) * static_cast<double>(t.phi(g));
      const double den = static_cast<double>(t.phi(u)) * static_cast<double>(t.phi(v)) * static_cast<double>(g);
      s += num / den;
    }
    const double ratio = s.value() / static_cast<double>(n);
    running = std::max(running, ratio);
    if (ratio > best) {
      best = ratio;
      best_n = n;
      best_sum = s.value();
    }
    if (n == next_mark || n == n_max) {
      prefix_max.push_back(running);
      next_mark *= 2;
    }
  }
  auto r = make_report("quotient-sum", "n_max=" + std::to_string(n_max), best_sum, static_cast<double>(best_n));
  const bool growing = growth_flag(prefix_max);
  r.pass = std::isfinite(r.ratio) && !growing;
  r.notes = "max_n S(n)/n at n=" + std::to_string(best_n) + (growing ? "; growth flagged" : "; no growth");
  return r;
}

LemmaReport check_brun_titchmarsh(u64 x, const BrunTitchmarshSample& sample) {
  if (x < 10) throw ArgumentError("check_brun_titchmarsh: x must be >= 10");
  const auto primes = primes_up_to(x);
  const SieveTable t = build_sieve(1, x);

  std::vector<u64> moduli;
  using Mode = BrunTitchmarshSample::Mode;
  const bool exhaustive = sample.mode == Mode::exhaustive || (sample.mode == Mode::automatic && x <= 10'000);
  if (exhaustive) {
    moduli.resize(x - 1);
    std::iota(moduli.begin(), moduli.end(), u64{1});
  } else {
    std::mt19937_64 rng(sample.seed);
    std::uniform_int_distribution<u64> pick(1, x - 1);
    moduli = {1, 2, 3, x - 1};
    for (u64 i = 0; i < sample.count; ++i) moduli.push_back(pick(rng));
    std::sort(moduli.begin(), moduli.end());
    moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());
  }

  const double xd = static_cast<double>(x);
  u64 violations = 0;
  u64 checked = 0;
  double worst = -1.0;
  u64 worst_k = 1, worst_b = 1, worst_count = 0;
  double worst_rhs = 0.0;
  std::vector<std::uint32_t> counts;
  std::vector<u64> touched;
  for (u64 k : moduli) {
    counts.assign(k, 0);
    touched.clear();
    for (u64 p : primes) {
      const u64 r = p % k;
      if (counts[r]++ == 0) touched.push_back(r);
    }
    const double rhs = 2.0 * xd / (static_cast<double>(t.phi(k)) * std::log(xd / static_cast<double>(k)));
    for (u64 r : touched) {
      if (std::gcd(r, k) != 1) continue;
      ++checked;
      const double lhs = counts[r];
      if (!(lhs < rhs)) ++violations;
      if (lhs / rhs > worst) {
        worst = lhs / rhs;
        worst_k = k;
        worst_b = r == 0 ? k : r;
        worst_count = counts[r];
        worst_rhs = rhs;
      }
    }
  }
  auto rep = make_report("brun-titchmarsh",
                         "x=" + std::to_string(x) + (exhaustive ? " exhaustive" : " sampled") +
                             " moduli=" + std::to_string(moduli.size()),
                         static_cast<double>(worst_count), worst_rhs);
  rep.theorem_grade = true;
  rep.pass = violations == 0;
  rep.notes = "violations=" + std::to_string(violations) + " classes_checked=" + std::to_string(checked) +
              " worst (k,b)=(" + std::to_string(worst_k) + "," + std::to_string(worst_b) + ")";
  return rep;
}

std::vector<LemmaReport> check_squarefree_progressions(u64 x, u64 k_max) {
  if (x < 1000) throw ArgumentError("check_squarefree_progressions: x must be >= 1000");
  if (k_max < 1 || static_cast<uint128>(k_max) * k_max * k_max > x) {
    throw ArgumentError("check_squarefree_progressions: need 1 <= k_max <= x^(1/3)");
  }
  std::vector<std::uint8_t> sqfree(x + 1, 1);
  sqfree[0] = 0;
  for (u64 p : primes_up_to(isqrt(x))) {
    for (u64 m = p * p; m <= x; m += p * p) sqfree[m] = 0;
  }
  const PrimeBitmap primes(x + k_max);
  const double logx = std::log(static_cast<double>(x));

  std::vector<LemmaReport> out;
  for (u64 k = 1; k <= k_max; ++k) {
    const double rhs = static_cast<double>(x) / (100.0 * static_cast<double>(euler_phi(k)) * logx);
    const u64 a_max = x / k;
    u64 violations = 0;
    double worst = INFINITY;
    u64 worst_b = 1;
    u64 worst_lhs = 0;
    const u64 b_hi = k == 1 ? 2 : k;
    for (u64 b = 1; b < b_hi; ++b) {
      if (std::gcd(b, k) != 1) continue;
      u64 lhs = 0;
      for (u64 a = 1; a <= a_max; ++a) {
        if (sqfree[a] && primes.test(a * k + b)) ++lhs;
      }
      if (!(static_cast<double>(lhs) > rhs)) ++violations;
      if (static_cast<double>(lhs) / rhs < worst) {
        worst = static_cast<double>(lhs) / rhs;
        worst_b = b;
        worst_lhs = lhs;
      }
    }
    auto rep = make_report("squarefree-progressions",
                           "x=" + std::to_string(x) + " k=" + std::to_string(k),
                           static_cast<double>(worst_lhs), rhs);
    rep.pass = violations == 0;
    rep.notes = "violations=" + std::to_string(violations) + " worst b=" + std::to_string(worst_b) +
                "; report-only (exceptional moduli are not constructive)";
    out.push_back(std::move(rep));
  }
  return out;
}

LemmaReport check_tail_prime_sum(u64 prime_limit) {
  if (prime_limit < 5) throw ArgumentError("check_tail_prime_sum: limit must be >= 5");
  CompensatedSum partial;
  for_each_prime(5, prime_limit + 1, [&](u64 p) {
    const double pd = static_cast<double>(p);
    partial += 1.0 / (pd * (pd - 1.0));
  });
  const double tail = 1.0 / static_cast<double>(prime_limit);
  auto rep = make_report("tail-prime-sum", "limit=" + std::to_string(prime_limit), partial.value() + tail, 0.1065);
  rep.theorem_grade = true;
  rep.pass = rep.lhs < rep.rhs;
  rep.notes = "partial=" + fmt(partial.value()) + " tail<=1/limit=" + fmt(tail);
  return rep;
}

double char_sum(u64 x) {
  if (x < 2) throw ArgumentError("char_sum: x must be >= 2");
  const auto primes = primes_up_to(isqrt(x));
  // residue[i][r] = ((-r)/p) via the Legendre symbol of r mod p_i.
  std::vector<std::vector<std::int8_t>> legendre;
  std::vector<u64> odd_primes;
  for (u64 p : primes) {
    if (p == 2) continue;
    std::vector<std::int8_t> table(p, -1);
    table[0] = 0;
    for (u64 b = 1; b < p; ++b) table[b * b % p] = 1;
    legendre.push_back(std::move(table));
    odd_primes.push_back(p);
  }
  CompensatedSum total;
  for_each_table(1, x + 1, [&](const SieveTable& t) {
    for (u64 a = t.lo(); a < t.hi(); ++a) {
      if (t.mu(a) == 0) continue;
      double product = 1.0;
      for (std::size_t i = 0; i < odd_primes.size(); ++i) {
        const u64 p = odd_primes[i];
        const u64 r = (p - a % p) % p;
        product *= 1.0 - legendre[i][r] / static_cast<double>(p);
      }
      const double ad = static_cast<double>(a);
      const double phi = static_cast<double>(t.phi(a));
      total += ad / (phi * phi) * product * product;
    }
  });
  return total.value();
}

std::array<LemmaReport, 2> check_char_sum(u64 x, const CharSumOptions& options) {
  if (x < 2) throw ArgumentError("check_char_sum: x must be >= 2");
  if (x > options.max_x && !options.force) {
    throw ResourceError("check_char_sum: x = " + std::to_string(x) + " exceeds ceiling " +
                        std::to_string(options.max_x));
  }
  auto main = make_report("char-sum", "x=" + std::to_string(x), char_sum(x), std::log(static_cast<double>(x)));
  main.pass = std::isfinite(main.ratio);
  main.notes = "sum_{a<=x} a mu(a)^2/phi(a)^2 prod_{2<p<=sqrt x}(1-(-a/p)/p)^2 vs log x";

  const u64 y = std::min<u64>(x, 10'000);
  const u64 big = 1000 * y;
  CompensatedSum tail;
  for_each_table(y + 1, big + 1, [&](const SieveTable& t) {
    for (u64 a = t.lo(); a < t.hi(); ++a) {
      const double ad = static_cast<double>(a);
      const double phi = static_cast<double>(t.phi(a));
      const double q = ad / phi;
      tail += q * q * q * q / (ad * ad);
    }
  });
  const double yd = static_cast<double>(y);
  auto aux = make_report("char-sum/aux", "y=" + std::to_string(y) + " Y=" + std::to_string(big), yd * tail.value(), 1.0);
  aux.pass = std::isfinite(aux.ratio) && aux.lhs > 0.0;
  aux.notes = "y*sum_{y<a<=Y} a^2/phi(a)^4; truncation error y*tail <= " +
              fmt(yd * totient_tail_bound(static_cast<double>(big), 4));
  return {main, aux};
}

unsigned rho(u64 a, u64 p) {
  unsigned count = 0;
  const u64 ar = a % p;
  u64 b2 = 0;  // b^2 mod p
  for (u64 b = 0; b < p; ++b) {
    if ((ar * b2 + 1) % p == 0) ++count;
    b2 = (b2 + 2 * b + 1) % p;
  }
  return count;
}

unsigned rho_pair(u64 m, u64 n, u64 p) {
  const u64 m2 = m % p * (m % p) % p;
  const u64 n2 = n % p * (n % p) % p;
  unsigned count = 0;
  u64 u = 1 % p;  // b m^2 + 1 mod p
  u64 v = 1 % p;  // b n^2 + 1 mod p
  for (u64 b = 0; b < p; ++b) {
    if (u == 0 || v == 0) ++count;
    u += m2;
    if (u >= p) u -= p;
    v += n2;
    if (v >= p) v -= p;
  }
  return count;
}

unsigned rho_pair_formula(u64 m, u64 n, u64 p) {
  if (std::gcd(m, n) % p == 0) return 0;
  const u64 mm = m % p;
  const u64 nn = n % p;
  const u64 diff = (nn + p - mm) % p;
  const u64 sum = (nn + mm) % p;
  const bool divides = mm == 0 || nn == 0 || diff == 0 || sum == 0;
  return divides ? 1 : 2;
}

LemmaReport check_rho_identities(u64 a_max, u64 p_max, u64 mn_max) {
  if (a_max < 3 || p_max < 3) throw ArgumentError("check_rho_identities: a_max and p_max must be >= 3");
  const auto primes = primes_up_to(p_max);
  u64 checks = 0;
  u64 mismatches = 0;
  std::string first;
  for (u64 a = 1; a <= a_max; ++a) {
    if (!is_squarefree(a)) continue;
    for (u64 p : primes) {
      if (p == 2) continue;
      const int expected = a % p == 0 ? 0 : 1 + kronecker(-static_cast<std::int64_t>(a), p);
      ++checks;
      if (static_cast<int>(rho(a, p)) != expected) {
        if (mismatches++ == 0) first = "rho_" + std::to_string(a) + "(" + std::to_string(p) + ")";
      }
    }
  }
  for (u64 n = 2; n <= mn_max; ++n) {
    for (u64 m = 1; m < n; ++m) {
      for (u64 p : primes) {
        ++checks;
        if (rho_pair(m, n, p) != rho_pair_formula(m, n, p)) {
          if (mismatches++ == 0) {
            first = "rho_{" + std::to_string(m) + "," + std::to_string(n) + "}(" + std::to_string(p) + ")";
          }
        }
      }
    }
  }
  auto rep = make_report("rho-identities",
                         "a_max=" + std::to_string(a_max) + " p_max=" + std::to_string(p_max) +
                             " mn_max=" + std::to_string(mn_max),
                         static_cast<double>(mismatches), static_cast<double>(checks));
  rep.theorem_grade = true;
  rep.pass = mismatches == 0;
  rep.notes = "mismatches=" + std::to_string(mismatches) + " checks=" + std::to_string(checks) +
              (first.empty() ? "" : " first=" + first);
  return rep;
}

LemmaReport check_mu_phi_identity(u64 n_max) {
  if (n_max < 1) throw ArgumentError("check_mu_phi_identity: n_max must be >= 1");
  const SieveTable t = build_sieve(1, n_max + 1);
  std::vector<u64> acc(n_max + 1, 0);
  u64 mismatches = 0;
  for (u64 m = 1; m <= n_max; ++m) {
    if (t.mu(m) == 0) continue;
    const u64 pm = t.phi(m);
    for (u64 n = m; n <= n_max; n += m) {
      if (t.phi(n) % pm != 0) ++mismatches;
      acc[n] += t.phi(n) / pm;
    }
  }
  for (u64 n = 1; n <= n_max; ++n) {
    if (acc[n] != n) ++mismatches;
  }
  auto rep = make_report("mu-phi-identity", "n_max=" + std::to_string(n_max), static_cast<double>(mismatches),
                         static_cast<double>(n_max));
  rep.theorem_grade = true;
  rep.pass = mismatches == 0;
  rep.notes = "exact integer form n = sum_{m|n} mu(m)^2 phi(n)/phi(m); mismatches=" + std::to_string(mismatches);
  return rep;
}

LemmaReport check_omega_identity(u64 n_max) {
  if (n_max < 1) throw ArgumentError("check_omega_identity: n_max must be >= 1");
  const SieveTable t = build_sieve(1, n_max + 1);
  std::vector<u64> divisors(n_max + 1, 0);
  for (u64 d = 1; d <= n_max; ++d) {
    if (t.mu(d) == 0) continue;
    for (u64 n = d; n <= n_max; n += d) ++divisors[n];
  }
  u64 mismatches = 0;
  for (u64 n = 1; n <= n_max; ++n) {
    if (divisors[n] != (u64{1} << t.omega(n))) ++mismatches;
  }
  auto rep = make_report("omega-identity", "n_max=" + std::to_string(n_max), static_cast<double>(mismatches),
                         static_cast<double>(n_max));
  rep.theorem_grade = true;
  rep.pass = mismatches == 0;
  rep.notes = "sum_{d|k} mu(d)^2 = 2^omega(k); mismatches=" + std::to_string(mismatches);
  return rep;
}

LemmaReport check_phi_square_identity(u64 n_max) {
  if (n_max < 1) throw ArgumentError("check_phi_square_identity: n_max must be >= 1");
  const SieveTable t = build_sieve(1, n_max + 1);
  u64 mismatches = 0;
  for (u64 n = 1; n <= n_max; ++n) {
    // phi(n^2) from the factorization of n^2 = prod p^(2e).
    u64 phi_sq = 1;
    for (auto [p, e] : t.factorize(n)) {
      phi_sq *= p - 1;
      for (unsigned i = 1; i < 2 * e; ++i) phi_sq *= p;
    }
    if (phi_sq != n * t.phi(n)) ++mismatches;
  }
  auto rep = make_report("phi-square-identity", "n_max=" + std::to_string(n_max), static_cast<double>(mismatches),
                         static_cast<double>(n_max));
  rep.theorem_grade = true;
  rep.pass = mismatches == 0;
  rep.notes = "mismatches=" + std::to_string(mismatches);
  return rep;
}

ArtinResult artin_local_constant(u64 k, u64 prime_cut) {
  if (k < 1) throw ArgumentError("artin_local_constant: k must be >= 1");
  ArtinResult out;
  out.prime_cut = prime_cut;
  CompensatedSum log_sum;
  for_each_prime(2, prime_cut + 1, [&](u64 p) {
    const double pd = static_cast<double>(p);
    log_sum += std::log1p(-1.0 / (pd * (pd - 1.0)));
    ++out.terms;
  });
  double local = 1.0;
  for (auto [p, e] : factorize(k)) {
    const double pd = static_cast<double>(p);
    local *= 1.0 - 1.0 / (pd * pd * pd - pd * pd - pd);
  }
  out.value = std::exp(log_sum.value()) * local;
  // prod_{p > cut} (1 - 1/(p(p-1))) >= 1 - sum_{n > cut} 1/(n(n-1)) = 1 - 1/cut.
  out.lower_bound = prime_cut >= 2 ? out.value * (1.0 - 1.0 / static_cast<double>(prime_cut)) : 0.0;
  return out;
}

}  // namespace sqpairs
