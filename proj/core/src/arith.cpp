#include "sqpairs/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sqpairs/errors.hpp"
#include "sqpairs/parallel.hpp"

namespace sqpairs {

using u64 = std::uint64_t;
using u128 = uint128;

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 isqrt(u128 n) {
  if (n >> 64 == 0) return isqrt(static_cast<u64>(n));
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  if (r > 0xFFFFFFFFFFFFFFFFull) r = 0xFFFFFFFFFFFFFFFFull;
  while (r > 0 && r * r > n) --r;
  while (r < 0xFFFFFFFFFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
  return static_cast<u64>(r);
}

namespace {

// r^k with saturation at n + 1, so callers can compare against n.
u128 bounded_pow(u128 r, unsigned k, u128 n) {
  u128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r != 0 && acc > n / r) return n + 1;
    acc *= r;
  }
  return acc;
}

}  // namespace

u64 iroot(u128 n, unsigned k) {
  if (k == 0) throw ArgumentError("iroot: k must be positive");
  if (k == 1) return static_cast<u64>(n);
  if (n < 2) return static_cast<u64>(n);
  auto r = static_cast<u128>(std::pow(static_cast<long double>(n), 1.0L / k));
  while (r > 0 && bounded_pow(r, k, n) > n) --r;
  while (bounded_pow(r + 1, k, n) <= n) ++r;
  return static_cast<u64>(r);
}

u64 icbrt(u64 n) { return iroot(n, 3); }

bool is_perfect_square(u128 n) {
  u64 r = isqrt(n);
  return static_cast<u128>(r) * r == n;
}

bool is_perfect_power(u128 n, unsigned k) {
  u64 r = iroot(n, k);
  return bounded_pow(r, k, n) == n;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 result = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (u64 p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    if (p <= n / p) {
      for (u64 m = p * p; m <= n; m += p) composite[m] = true;
    }
  }
  return primes;
}

void mark_primes_in_segment(u64 lo, u64 hi, std::span<const u64> base_primes,
                            std::vector<std::uint8_t>& flags) {
  flags.assign(hi - lo, 1);
  for (u64 n = lo; n < std::min<u64>(hi, 2); ++n) flags[n - lo] = 0;
  for (u64 p : base_primes) {
    if (p > (hi - 1) / p) break;
    u64 start = std::max(p * p, (lo + p - 1) / p * p);
    for (u64 m = start; m < hi; m += p) flags[m - lo] = 0;
  }
}

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn, u64 segment_size) {
  if (hi <= lo || hi <= 2) return;
  const auto base = primes_up_to(isqrt(hi - 1));
  std::vector<std::uint8_t> flags;
  for (u64 a = std::max<u64>(lo, 2); a < hi;) {
    u64 b = (hi - a > segment_size) ? a + segment_size : hi;
    mark_primes_in_segment(a, b, base, flags);
    for (u64 i = 0; i < b - a; ++i) {
      if (flags[i]) fn(a + i);
    }
    a = b;
  }
}

PrimeBitmap::PrimeBitmap(u64 limit) : limit_(limit), bits_((limit / 2 + 64) / 64, 0) {
  for_each_prime(3, limit + 1, [this](u64 p) {
    u64 i = p >> 1;
    bits_[i >> 6] |= u64{1} << (i & 63);
  });
}

std::size_t SieveTable::index(u64 n) const {
  if (!contains(n)) {
    throw ArgumentError("SieveTable: " + std::to_string(n) + " outside [" + std::to_string(lo_) +
                        ", " + std::to_string(hi_) + ")");
  }
  return static_cast<std::size_t>(n - lo_);
}

std::vector<std::pair<u64, unsigned>> SieveTable::factorize(u64 n) const {
  if (lo_ != 1) throw ArgumentError("SieveTable::factorize requires a table starting at 1");
  std::vector<std::pair<u64, unsigned>> out;
  while (n > 1) {
    u64 p = spf(n);
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

SieveTable build_sieve(u64 lo, u64 hi, const SieveConfig& config) {
  if (lo == 0) throw ArgumentError("build_sieve: lo must be >= 1");
  if (lo >= hi) throw ArgumentError("build_sieve: empty range, lo >= hi");
  if (hi - lo > config.max_table_size) {
    throw ResourceError("build_sieve: range of " + std::to_string(hi - lo) +
                        " values exceeds table budget " + std::to_string(config.max_table_size));
  }
  SieveTable t;
  t.lo_ = lo;
  t.hi_ = hi;
  const auto size = static_cast<std::size_t>(hi - lo);
  t.spf_.assign(size, 0);
  t.phi_.resize(size);
  t.mu_.assign(size, 1);
  t.sqf_.assign(size, 1);
  t.omega_.assign(size, 0);
  const auto base = primes_up_to(isqrt(hi - 1));

  for_each_segment(lo, hi, config.segment_size, config.threads, [&](u64, u64 a, u64 b) {
    std::vector<u64> rem(b - a);
    for (u64 n = a; n < b; ++n) {
      rem[n - a] = n;
      t.phi_[n - lo] = n;
    }
    for (u64 p : base) {
      for (u64 m = (a + p - 1) / p * p; m < b; m += p) {
        const std::size_t i = m - lo;
        u64& r = rem[m - a];
        unsigned e = 0;
        do {
          r /= p;
          ++e;
        } while (r % p == 0);
        if (t.spf_[i] == 0) t.spf_[i] = p;
        t.phi_[i] = t.phi_[i] / p * (p - 1);
        ++t.omega_[i];
        t.mu_[i] = e >= 2 ? 0 : static_cast<std::int8_t>(-t.mu_[i]);
        if (e & 1) t.sqf_[i] *= p;
      }
    }
    for (u64 n = a; n < b; ++n) {
      const std::size_t i = n - lo;
      const u64 r = rem[n - a];
      if (r > 1) {
        if (t.spf_[i] == 0) t.spf_[i] = r;
        t.phi_[i] = t.phi_[i] / r * (r - 1);
        ++t.omega_[i];
        t.mu_[i] = static_cast<std::int8_t>(-t.mu_[i]);
        t.sqf_[i] *= r;
      }
      if (n == 1) t.spf_[i] = 1;
    }
  });
  return t;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  if (n < 2) return out;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  take(2);
  take(3);
  for (u64 p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

bool is_squarefree(u64 n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(n)) {
    if (e >= 2) return false;
  }
  return true;
}

u64 squarefree_part(u64 n) {
  if (n == 0) throw ArgumentError("squarefree_part: n must be >= 1");
  // Strip every prime up to cbrt(n); the cofactor then has at most two prime
  // factors, so it is either a prime square or squarefree.
  const u64 bound = icbrt(n);
  u64 part = 1;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e & 1) part *= p;
  };
  take(2);
  take(3);
  for (u64 p = 5; p <= bound; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1 && !is_perfect_square(n)) part *= n;
  return part;
}

u64 count_primes_in_progression(const PrimeCountQuery& q) {
  if (q.k == 0) throw ArgumentError("count_primes_in_progression: modulus must be >= 1");
  if (q.b < 1 || q.b > q.k) throw ArgumentError("count_primes_in_progression: need 1 <= b <= k");
  if (std::gcd(q.b, q.k) != 1) throw ArgumentError("count_primes_in_progression: gcd(b, k) != 1");
  const u64 target = q.b % q.k;
  u64 count = 0;
  for_each_prime(2, q.x + 1, [&](u64 p) {
    if (p % q.k == target) ++count;
  });
  return count;
}

}  // namespace sqpairs
