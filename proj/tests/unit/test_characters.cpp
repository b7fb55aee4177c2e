#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sqpairs/arith.hpp"
#include "sqpairs/characters.hpp"
#include "sqpairs/errors.hpp"

using namespace sqpairs;
using u64 = std::uint64_t;

namespace {

// Composite midpoint rule, independent of the library's quadrature.
double midpoint_li(double upper, int steps) {
  const double h = (upper - 2.0) / steps;
  double s = 0.0;
  for (int i = 0; i < steps; ++i) s += 1.0 / std::log(2.0 + (i + 0.5) * h);
  return s * h;
}

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("kronecker examples") {
    CHECK(kronecker(-1, 5) == 1);
    CHECK(kronecker(-1, 3) == -1);
    for (long long d = -20; d <= 20; ++d) CHECK(kronecker(d, 1) == 1);
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(2, 0) == 0);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(1, 2) == 1);
    CHECK(kronecker(-4, 2) == 0);
  }

  TEST_CASE("kronecker matches Euler's criterion") {
    for (u64 p : oracle::primes(999)) {
      if (p == 2) continue;
      for (long long d = -999; d <= 999; ++d) {
        if (d % static_cast<long long>(p) == 0) continue;
        REQUIRE(kronecker(d, p) == oracle::euler_criterion(d, p));
      }
    }
  }

  TEST_CASE("kronecker is multiplicative in n") {
    for (long long d = -30; d <= 30; ++d) {
      for (u64 m = 1; m < 60; ++m) {
        for (u64 n = 1; n < 60; ++n) CHECK(kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n));
      }
    }
  }

  TEST_CASE("jacobi agrees with kronecker on odd moduli") {
    for (u64 n = 1; n < 300; n += 2) {
      for (u64 a = 0; a < 300; ++a) CHECK(jacobi(a, n) == kronecker(static_cast<long long>(a), n));
    }
  }

  TEST_CASE("chi_a examples and conductor") {
    CHECK(chi_a(3, 2) == 1);
    CHECK(chi_a(1, 2) == 0);
    CHECK(chi_a(5, 3) == 1);
    CHECK_THROWS_AS(chi_a(4, 3), ArgumentError);
    CHECK_THROWS_AS(make_quad_char(12), ArgumentError);
    CHECK(make_quad_char(3).conductor == 3);
    CHECK(make_quad_char(7).conductor == 7);
    CHECK(make_quad_char(1).conductor == 4);
    CHECK(make_quad_char(2).conductor == 8);
    CHECK(make_quad_char(5).conductor == 20);
  }

  TEST_CASE("characters are periodic mod the conductor") {
    for (u64 a = 1; a <= 200; ++a) {
      if (!is_squarefree(a)) continue;
      const u64 f = make_quad_char(a).conductor;
      for (u64 n = 1; n <= 10'000; ++n) {
        REQUIRE(primitive_char(a, n) == primitive_char(a, n + f));
        if (a % 8 != 3) REQUIRE(chi_a(a, n) == chi_a(a, n + f));
      }
    }
  }

  TEST_CASE("chi_a on primes and its relation to the primitive character") {
    for (u64 a = 1; a <= 200; ++a) {
      if (!is_squarefree(a)) continue;
      for (u64 p : oracle::primes(500)) {
        if (p == 2) {
          CHECK(chi_a(a, 2) == (a % 4 == 3 ? 1 : 0));
        } else {
          CHECK(chi_a(a, p) == oracle::euler_criterion(-static_cast<long long>(a), p));
        }
      }
      for (u64 n = 1; n < 2000; n += 2) CHECK(chi_a(a, n) == primitive_char(a, n));
      for (u64 m = 1; m < 50; ++m) {
        for (u64 n = 1; n < 50; ++n) CHECK(chi_a(a, m * n) == chi_a(a, m) * chi_a(a, n));
      }
    }
  }

  TEST_CASE("euler products") {
    CHECK(euler_product(1, 2, 3).value == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(euler_product(1, 2, 3).terms == 1);
    CHECK(euler_product(7, 2, 2).value == 1.0);
    CHECK(euler_product(7, 2, 2).terms == 0);
    CHECK(euler_product(2, 2, 5).value == doctest::Approx(2.0 / 3.0 * 6.0 / 5.0).epsilon(1e-15));
    CHECK_THROWS_AS(euler_product(1, 1, 5), ArgumentError);
    CHECK_THROWS_AS(euler_product(1, 5, 3), ArgumentError);
    CHECK_THROWS_AS(euler_product(1, 2, 1e11), ResourceError);

    // Direct product against the symbol table.
    for (u64 a : {1, 2, 3, 5, 6, 7, 10, 11, 30}) {
      double direct = 1.0;
      for (u64 p : oracle::primes(3000)) {
        if (p > 2) direct *= 1.0 - oracle::euler_criterion(-static_cast<long long>(a), p) / static_cast<double>(p);
      }
      const auto r = euler_product(a, 2, 3000);
      CHECK(r.value == doctest::Approx(direct).epsilon(1e-12));
      CHECK(r.value > 0.0);
    }
    // The log-space path agrees with the plain product.
    const auto fn = [](u64 p) { return chi_a(5, p); };
    const double low = euler_product(fn, 2, 1e6).value;
    const double high = euler_product(fn, 1e6, 2e6).value;
    CHECK(euler_product(fn, 2, 2e6).value == doctest::Approx(low * high).epsilon(1e-10));
  }

  TEST_CASE("p versus p-1 product forms stay within a factor of two") {
    const auto ps = primes_up_to(10'000);
    for (u64 a = 1; a <= 1000; ++a) {
      if (!is_squarefree(a)) continue;
      double ratio = 1.0;
      for (u64 p : ps) {
        if (p == 2) continue;
        const double c = kronecker(-static_cast<long long>(a), p);
        const double pd = static_cast<double>(p);
        ratio *= (1.0 - c / (pd - 1.0)) / (1.0 - c / pd);
      }
      CHECK(ratio >= 0.5);
      CHECK(ratio <= 2.0);
    }
  }

  TEST_CASE("singular series") {
    CHECK(singular_series(3).value == 1.5);
    CHECK(singular_series(2).value == 1.0);
    CHECK(singular_series(2).terms == 0);
    const auto s5 = singular_series(100'000);
    const auto s6 = singular_series(1'000'000);
    CHECK(s5.value == doctest::Approx(1.3723504822).epsilon(1e-9));
    CHECK(s6.value == doctest::Approx(1.3728105098).epsilon(1e-9));
    // The series converges only conditionally; a decade buys about 5e-4.
    CHECK(std::abs(s6.value - s5.value) < 1e-3);
    CHECK(s6.tail_estimate < s5.tail_estimate);
    double prev = INFINITY;
    for (u64 l : {1000, 10'000, 100'000, 1'000'000}) {
      const double t = singular_series(l).tail_estimate;
      CHECK(t < prev);
      prev = t;
    }
  }

  TEST_CASE("log integral and heuristic") {
    CHECK(log_integral_from_2(2.0) == 0.0);
    for (double upper : {3.0, 10.0, 100.0, 1000.0, 31'622.0}) {
      const double mid = midpoint_li(upper, 2'000'000);
      CHECK(log_integral_from_2(upper) == doctest::Approx(mid).epsilon(1e-6));
    }
    CHECK(landau_heuristic(4.0) == 0.0);
    CHECK_THROWS_AS(landau_heuristic(3.9), ArgumentError);
    const double h = landau_heuristic(1e6, 1'000'000);
    CHECK(h == doctest::Approx(0.5 * singular_series(1'000'000).value * midpoint_li(1000.0, 2'000'000)).epsilon(1e-6));
    CHECK(landau_count(100) == 4);
    CHECK(landau_count(10'000) == 19);
    CHECK(landau_count(1'000'000) == 112);
    CHECK(landau_count(1) == 0);
    CHECK(landau_count(2) == 1);
  }
}
