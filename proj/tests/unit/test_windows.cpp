#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sqpairs/errors.hpp"
#include "sqpairs/windows.hpp"

using namespace sqpairs;
using u64 = std::uint64_t;

namespace {

// Direct enumeration of the window sums, sharing nothing with the library.
struct Sums {
  u64 n1 = 0;
  u64 n2 = 0;
};

Sums direct_sums(u64 x, u64 y) {
  Sums s;
  for (u64 a = 1; a * y * y <= x; ++a) {
    if (oracle::mu(a) == 0) continue;
    u64 c = 0;
    for (u64 n = (y + 1) / 2; n < y; ++n) c += oracle::is_prime(a * n * n + 1);
    s.n1 += c;
    s.n2 += c * c;
  }
  return s;
}

}  // namespace

TEST_SUITE("windows") {
  TEST_CASE("window counts") {
    CHECK(window_count(1, make_window(16, 4)) == 1);
    CHECK(window_count(1, make_window(4, 2)) == 1);
    CHECK(window_count(2, make_window(32, 4)) == 1);
    CHECK_THROWS_AS(window_count(4, make_window(64, 4)), ArgumentError);
    const auto w = make_window(1000, 7);
    CHECK(w.n_lo == 4);
    CHECK(w.n_hi == 7);
    CHECK(w.a_limit == 20);
    CHECK(w.length() == 3);
  }

  TEST_CASE("window construction errors") {
    CHECK_THROWS_AS(make_window(100, 1), ArgumentError);
    CHECK_THROWS_AS(make_window(15, 4), ArgumentError);
    CHECK_THROWS_AS(window_stats(15, 4), ArgumentError);
  }

  TEST_CASE("window stats against direct enumeration") {
    const auto s = window_stats(256, 4);
    const auto d = direct_sums(256, 4);
    CHECK(s.sum_n == d.n1);
    CHECK(s.sum_n2 == d.n2);
    CHECK(s.pair_contrib == d.n2 - d.n1);
    CHECK(s.outside_sixth_root);

    const auto sq = window_stats(49, 7);
    CHECK(sq.sum_n == window_count(1, make_window(49, 7)));
    CHECK(sq.sum_n2 == sq.sum_n * sq.sum_n);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
      const u64 x = std::uniform_int_distribution<u64>(16, 200'000)(rng);
      const u64 y = std::uniform_int_distribution<u64>(2, static_cast<u64>(std::sqrt(static_cast<double>(x))))(rng);
      const auto st = window_stats(x, y);
      const auto dd = direct_sums(x, y);
      REQUIRE(st.sum_n == dd.n1);
      REQUIRE(st.sum_n2 == dd.n2);
      CHECK(st.sum_n2 >= st.sum_n);
      CHECK(st.cauchy_schwarz_holds);
      CHECK(st.cs_bound <= static_cast<double>(st.pair_contrib) + 1e-9 * std::abs(st.cs_bound));
    }
  }

  TEST_CASE("window collections") {
    CHECK(window_collection(1'000'000, WindowPolicy::log_squared).empty());
    CHECK(window_collection(1'000'000, WindowPolicy::sixth_root) == std::vector<u64>{2, 4, 8});
    CHECK(window_collection(1'000'000, WindowPolicy::sqrt).size() == 9);
    CHECK(window_collection(1'000'000, WindowPolicy::sqrt).back() == 512);
    // (log x)^2 <= x^(1/6) needs x past about 1e20, beyond 64 bits.
    CHECK(window_collection(~u64{0}, WindowPolicy::log_squared).empty());
    CHECK(window_collection(~u64{0}, WindowPolicy::sixth_root).back() == 1024);
    CHECK(std::string(to_string(WindowPolicy::sixth_root)) == "sixth-root");
    CHECK(parse_window_policy("sqrt") == WindowPolicy::sqrt);
    CHECK_THROWS_AS(parse_window_policy("wide"), ArgumentError);
  }

  TEST_CASE("lower bound construction") {
    CHECK(lower_bound_construction(16).empty_collection);
    CHECK(lower_bound_construction(16).windows.empty());
    CHECK_THROWS_AS(lower_bound_construction(15), ArgumentError);
    const u64 s = count_pairs_grouped(1'000'001).s_x;
    for (auto policy : {WindowPolicy::log_squared, WindowPolicy::sixth_root, WindowPolicy::sqrt}) {
      const auto r = lower_bound_construction(1'000'000, policy);
      CHECK(r.aggregate <= s);
      u64 total = 0;
      for (const auto& w : r.windows) {
        CHECK(w.cauchy_schwarz_holds);
        total += w.pair_contrib;
        const auto d = direct_sums(1'000'000, w.y);
        CHECK(w.sum_n == d.n1);
        CHECK(w.sum_n2 == d.n2);
      }
      CHECK(total == r.aggregate);
    }
    const auto a = lower_bound_construction(1'000'000, WindowPolicy::sqrt, 1);
    const auto b = lower_bound_construction(1'000'000, WindowPolicy::sqrt, 8);
    CHECK(a.aggregate == b.aggregate);
    CHECK(a.windows.size() == b.windows.size());
    CHECK(a.aggregate == 24'034);
  }

  TEST_CASE("window counts stay below the window length") {
    const auto w = make_window(1'000'000, 64);
    for (u64 a = 1; a <= w.a_limit; ++a) {
      if (is_squarefree(a)) CHECK(window_count(a, w) <= w.length());
    }
  }

  TEST_CASE("ratio scan") {
    const std::vector<u64> ten = {10};
    const auto r = ratio_scan(ten);
    CHECK(r.points[0].s_x == 2);
    CHECK(r.points[0].ratio == doctest::Approx(2 * std::log(10.0) / 10).epsilon(1e-15));
    CHECK(r.points[0].ratio == doctest::Approx(0.4605).epsilon(1e-4));
    CHECK(r.spread == 1.0);
    const std::vector<u64> five = {5};
    CHECK(ratio_scan(five).points[0].ratio == doctest::Approx(2 * std::log(5.0) / 5).epsilon(1e-15));
    const std::vector<u64> unsorted = {100, 10};
    CHECK_THROWS_AS(ratio_scan(unsorted), ArgumentError);
    const std::vector<u64> small = {4, 10};
    CHECK_THROWS_AS(ratio_scan(small), ArgumentError);
    const std::vector<u64> grid = {10'000, 100'000, 1'000'000};
    const auto g = ratio_scan(grid);
    CHECK(g.points[2].s_x == 163'876);
    CHECK(g.min_ratio == doctest::Approx(1.974697).epsilon(1e-6));
    CHECK(g.max_ratio == doctest::Approx(2.264031).epsilon(1e-6));
  }

  TEST_CASE("upper split") {
    const auto four = upper_split(4);
    CHECK(four.s1 == 1);
    CHECK(four.s2 == 0);
    const auto two = upper_split(2);
    CHECK(two.s1 == 0);
    CHECK(two.s2 == 0);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
      const u64 x = std::uniform_int_distribution<u64>(4, 10'000)(rng);
      const auto sp = upper_split(x);
      CHECK(2 * sp.s1 + 2 * sp.s2 == count_pairs_grouped(x + 1).s_x);
    }
    const auto big = upper_split(1'000'000);
    CHECK(2 * big.s1 + 2 * big.s2 == 163'876);
    CHECK(big.s2 > 0);
  }
}
