#include "sqpairs/characters.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "sqpairs/arith.hpp"
#include "sqpairs/errors.hpp"
#include "sqpairs/numeric.hpp"

namespace sqpairs {

using u64 = std::uint64_t;

namespace {

// (d/2) indexed by d mod 8.
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

}  // namespace

int jacobi(u64 a, u64 n) {
  if (n == 0 || (n & 1) == 0) throw ArgumentError("jacobi: n must be odd and positive");
  a %= n;
  int sign = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const u64 r = n & 7;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

int kronecker(std::int64_t d, u64 n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int k = 1;
  if ((n & 1) == 0) {
    if ((d & 1) == 0) return 0;
    const int v = __builtin_ctzll(n);
    n >>= v;
    if (v & 1) k = kTwoTable[d & 7];
  }
  if (n == 1) return k;
  // Odd n: (d/n) depends only on d mod n.
  const std::int64_t m = static_cast<std::int64_t>(n);
  std::int64_t r = d % m;
  if (r < 0) r += m;
  return k * jacobi(static_cast<u64>(r), n);
}

QuadChar make_quad_char(u64 a) {
  if (a == 0 || !is_squarefree(a)) {
    throw ArgumentError("quadratic character: a = " + std::to_string(a) + " is not a positive squarefree integer");
  }
  return QuadChar{a, a % 4 == 3 ? a : 4 * a};
}

namespace {

int odd_part_value(u64 a, u64 m) {
  // (-a/m) for odd m via the Jacobi symbol of -a mod m.
  if (m == 1) return 1;
  const u64 r = (m - a % m) % m;
  return jacobi(r, m);
}

}  // namespace

int chi_a(u64 a, u64 n) {
  make_quad_char(a);
  if (n == 0) return 0;
  const int v = __builtin_ctzll(n);
  if (v > 0 && a % 4 != 3) return 0;
  return odd_part_value(a, n >> v);
}

int primitive_char(u64 a, u64 n) {
  const QuadChar chi = make_quad_char(a);
  const std::int64_t disc = chi.conductor == a ? -static_cast<std::int64_t>(a)
                                               : -4 * static_cast<std::int64_t>(a);
  return kronecker(disc, n);
}

EulerProductResult euler_product(const std::function<int(u64)>& chi, double y, double z) {
  if (!(y >= 2.0) || !(z >= y)) throw ArgumentError("euler_product: need 2 <= y <= z");
  if (z > static_cast<double>(kMaxEulerPrime)) {
    throw ResourceError("euler_product: prime cut exceeds enumerable range");
  }
  EulerProductResult out;
  out.y = y;
  out.z = z;
  const u64 lo = static_cast<u64>(std::floor(y)) + 1;
  const u64 hi = static_cast<u64>(std::floor(z)) + 1;
  if (z > 1e6) {
    CompensatedSum log_sum;
    for_each_prime(lo, hi, [&](u64 p) {
      log_sum += std::log1p(-static_cast<double>(chi(p)) / static_cast<double>(p));
      ++out.terms;
    });
    out.value = std::exp(log_sum.value());
  } else {
    double value = 1.0;
    for_each_prime(lo, hi, [&](u64 p) {
      value *= 1.0 - static_cast<double>(chi(p)) / static_cast<double>(p);
      ++out.terms;
    });
    out.value = value;
  }
  return out;
}

EulerProductResult euler_product(u64 a, double y, double z) {
  make_quad_char(a);
  const auto d = -static_cast<std::int64_t>(a);
  return euler_product([d](u64 p) { return kronecker(d, p); }, y, z);
}

SeriesResult singular_series(u64 prime_limit) {
  SeriesResult out;
  out.prime_limit = prime_limit;
  if (prime_limit < 3) return out;
  CompensatedSum log_sum;
  double direct = 1.0;
  const bool use_log = prime_limit > 1'000'000;
  for_each_prime(3, prime_limit + 1, [&](u64 p) {
    const double chi = (p % 4 == 1) ? 1.0 : -1.0;
    const double t = chi / static_cast<double>(p - 1);
    if (use_log) {
      log_sum += std::log1p(-t);
    } else {
      direct *= 1.0 - t;
    }
    ++out.terms;
  });
  out.value = use_log ? std::exp(log_sum.value()) : direct;
  out.tail_estimate = 2.0 / static_cast<double>(prime_limit - 1);
  return out;
}

double log_integral_from_2(double upper) {
  if (upper <= 2.0) return 0.0;
  auto f = [](double t) { return 1.0 / std::log(t); };
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, 2.0, upper, 30, 1e-9, &error);
}

double landau_heuristic(double x, u64 prime_limit) {
  if (!(x >= 4.0)) throw ArgumentError("landau_heuristic: x must be >= 4");
  const double integral = log_integral_from_2(std::sqrt(x));
  if (integral == 0.0) return 0.0;
  return 0.5 * singular_series(prime_limit).value * integral;
}

u64 landau_count(u64 x) {
  if (x < 2) return 0;
  u64 count = 0;
  const u64 top = isqrt(x - 1);
  for (u64 n = 1; n <= top; ++n) {
    if (is_prime(n * n + 1)) ++count;
  }
  return count;
}

}  // namespace sqpairs
