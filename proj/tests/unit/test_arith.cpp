#include <doctest.h>

#include <limits>
#include <numeric>

#include "oracles.hpp"
#include "sqpairs/arith.hpp"
#include "sqpairs/errors.hpp"

using namespace sqpairs;
using u64 = std::uint64_t;

TEST_SUITE("arith") {
  TEST_CASE("sieve small tables") {
    CHECK(build_sieve(1, 13).sqf(12) == 3);
    CHECK(build_sieve(1, 9).sqf(8) == 2);
    const auto one = build_sieve(1, 2);
    CHECK(one.sqf(1) == 1);
    CHECK(one.phi(1) == 1);
    CHECK(one.mu(1) == 1);
    CHECK(one.omega(1) == 0);
  }

  TEST_CASE("sieve argument and resource errors") {
    CHECK_THROWS_AS(build_sieve(0, 10), ArgumentError);
    CHECK_THROWS_AS(build_sieve(10, 10), ArgumentError);
    CHECK_THROWS_AS(build_sieve(11, 10), ArgumentError);
    SieveConfig tight;
    tight.max_table_size = 1000;
    CHECK_THROWS_AS(build_sieve(1, 2000, tight), ResourceError);
    CHECK_NOTHROW(build_sieve(1, 1001, tight));
    const auto t = build_sieve(1, 10);
    CHECK_THROWS_AS(t.phi(10), ArgumentError);
  }

  TEST_CASE("sieve invariants against trial factorization") {
    const u64 hi = 20'001;
    const auto t = build_sieve(1, hi);
    for (u64 n = 1; n < hi; ++n) {
      const u64 a = t.sqf(n);
      REQUIRE(n % a == 0);
      CHECK(is_perfect_square(n / a));
      CHECK(oracle::mu(a) != 0);
      CHECK((t.mu(n) != 0) == (a == n));
      CHECK(t.mu(n) == oracle::mu(n));
      CHECK(t.phi(n) == oracle::phi(n));
      CHECK(a == oracle::sqf(n));
      CHECK(t.omega(n) == oracle::factor(n).size());
      CHECK(t.is_prime(n) == oracle::is_prime(n));
      if (n >= 2) {
        CHECK(oracle::is_prime(t.spf(n)));
        CHECK(n % t.spf(n) == 0);
        CHECK(t.spf(n) == oracle::factor(n).begin()->first);
      }
      CHECK(oracle::phi(n * n) == n * t.phi(n));
    }
  }

  TEST_CASE("segmented and monolithic sieves agree") {
    SieveConfig mono;
    SieveConfig seg;
    seg.segment_size = 997;
    seg.threads = 4;
    CHECK(build_sieve(1, 100'000, mono) == build_sieve(1, 100'000, seg));

    const auto full = build_sieve(1, 60'000);
    const auto part = build_sieve(50'000, 60'000, seg);
    for (u64 n = 50'000; n < 60'000; ++n) {
      CHECK(part.spf(n) == full.spf(n));
      CHECK(part.phi(n) == full.phi(n));
      CHECK(part.mu(n) == full.mu(n));
      CHECK(part.sqf(n) == full.sqf(n));
      CHECK(part.omega(n) == full.omega(n));
    }
  }

  TEST_CASE("sieve factorize") {
    const auto t = build_sieve(1, 1000);
    using F = std::vector<std::pair<u64, unsigned>>;
    CHECK(t.factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});
    CHECK(t.factorize(997) == F{{997, 1}});
    CHECK(t.factorize(1).empty());
    CHECK(factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});
    CHECK_THROWS_AS(build_sieve(5, 100).factorize(12), ArgumentError);
  }

  TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(1'000'003));
    for (u64 n = 0; n < 50'000; ++n) CHECK(is_prime(n) == oracle::is_prime(n));
    CHECK_FALSE(is_prime(561));
    CHECK_FALSE(is_prime(3'215'031'751ULL));          // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(3'825'123'056'546'413'051ULL));  // strong pseudoprime to bases 2..23
    CHECK(is_prime((u64{1} << 61) - 1));
    CHECK(is_prime(18'446'744'073'709'551'557ULL));
    CHECK_FALSE(is_prime(std::numeric_limits<u64>::max()));
    CHECK_FALSE(is_prime(4'294'967'291ULL * 4'294'967'279ULL));
  }

  TEST_CASE("segment marking and bitmap") {
    const auto base = primes_up_to(400);
    std::vector<std::uint8_t> flags;
    mark_primes_in_segment(100'000, 100'500, base, flags);
    for (u64 i = 0; i < 500; ++i) CHECK(static_cast<bool>(flags[i]) == oracle::is_prime(100'000 + i));
    const PrimeBitmap bits(30'000);
    for (u64 n = 0; n <= 30'000; ++n) CHECK(bits.test(n) == oracle::is_prime(n));
    u64 count = 0;
    for_each_prime(1, 100'001, [&](u64) { ++count; }, 777);
    CHECK(count == 9592);
    CHECK(primes_up_to(100).size() == 25);
  }

  TEST_CASE("primes in progressions") {
    CHECK(count_primes_in_progression({10, 4, 1}) == 1);
    CHECK(count_primes_in_progression({10, 4, 3}) == 2);
    CHECK(count_primes_in_progression({2, 1, 1}) == 1);
    CHECK(count_primes_in_progression({100, 3, 1}) == 11);
    CHECK_THROWS_AS(count_primes_in_progression({10, 4, 2}), ArgumentError);
    CHECK_THROWS_AS(count_primes_in_progression({10, 0, 1}), ArgumentError);
    CHECK_THROWS_AS(count_primes_in_progression({10, 4, 5}), ArgumentError);
  }

  TEST_CASE("squarefree part") {
    CHECK(squarefree_part(1) == 1);
    CHECK(squarefree_part(4) == 1);
    CHECK(squarefree_part(18) == 2);
    CHECK_THROWS_AS(squarefree_part(0), ArgumentError);
    const auto t = build_sieve(1, 100'001);
    for (u64 n = 1; n <= 100'000; ++n) {
      const u64 a = squarefree_part(n);
      REQUIRE(a == t.sqf(n));
      CHECK(a * (n / a) == n);
      CHECK(is_perfect_square(n / a));
    }
    CHECK(squarefree_part(1'000'003ULL * 1'000'003ULL * 7) == 7);
    CHECK(squarefree_part(1'000'003ULL * 1'000'033ULL) == 1'000'003ULL * 1'000'033ULL);
    CHECK(squarefree_part(1'000'003ULL * 1'000'003ULL) == 1);
    CHECK(squarefree_part(u64{1} << 63) == 2);
  }

  TEST_CASE("integer roots") {
    CHECK(isqrt(u64{0}) == 0);
    CHECK(isqrt(u64{15}) == 3);
    CHECK(isqrt(u64{16}) == 4);
    CHECK(isqrt(std::numeric_limits<u64>::max()) == 4'294'967'295ULL);
    const uint128 big = static_cast<uint128>(std::numeric_limits<u64>::max()) * std::numeric_limits<u64>::max();
    CHECK(isqrt(big) == std::numeric_limits<u64>::max());
    CHECK(icbrt(std::numeric_limits<u64>::max()) == 2'642'245ULL);
    CHECK(icbrt(26) == 2);
    CHECK(icbrt(27) == 3);
    CHECK(iroot(uint128{1} << 100, 4) == (u64{1} << 25));
    CHECK(is_perfect_power(uint128{3'486'784'401ULL}, 5));  // 81^5
    CHECK_FALSE(is_perfect_power(uint128{3'486'784'402ULL}, 5));
    CHECK(is_perfect_square(uint128{0}));
    CHECK_FALSE(is_perfect_square(uint128{2}));
    CHECK(powmod(3, 200, 1'000'000'007ULL) == 136'318'165ULL);
  }

  TEST_CASE("divisor identities") {
    const auto t = build_sieve(1, 10'001);
    for (u64 n = 1; n <= 10'000; ++n) {
      double s = 0.0;
      u64 sq_divisors = 0;
      for (u64 m = 1; m <= n; ++m) {
        if (n % m) continue;
        const int mm = t.mu(m);
        s += static_cast<double>(mm * mm) / static_cast<double>(t.phi(m));
        sq_divisors += static_cast<u64>(mm * mm);
      }
      const double want = static_cast<double>(n) / static_cast<double>(t.phi(n));
      CHECK(std::abs(s - want) <= 1e-12 * want);
      CHECK(sq_divisors == (u64{1} << t.omega(n)));
    }
  }

  TEST_CASE("scalar helpers") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(36) == 12);
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(12));
    CHECK_FALSE(is_squarefree(0));
  }
}
