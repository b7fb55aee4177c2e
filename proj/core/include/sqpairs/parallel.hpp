#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sqpairs {

// Splits [lo, hi) into consecutive segments of at most `segment` values and
// calls fn(index, seg_lo, seg_hi) for each, from up to `threads` workers.
// Segment indices are dense and ordered, so callers that store results per
// index get a reduction order independent of the thread count.
template <class Fn>
void for_each_segment(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment,
                      unsigned threads, Fn&& fn) {
  if (lo >= hi) return;
  if (segment == 0) segment = 1;
  const std::uint64_t count = (hi - lo + segment - 1) / segment;
  auto bounds = [&](std::uint64_t i) {
    std::uint64_t a = lo + i * segment;
    std::uint64_t b = (hi - a > segment) ? a + segment : hi;
    return std::pair{a, b};
  };
  if (threads <= 1 || count == 1) {
    for (std::uint64_t i = 0; i < count; ++i) {
      auto [a, b] = bounds(i);
      fn(i, a, b);
    }
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        auto [a, b] = bounds(i);
        fn(i, a, b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  const auto n = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <class Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn) {
  for_each_segment(0, count, 1, threads,
                   [&](std::uint64_t i, std::uint64_t, std::uint64_t) { fn(i); });
}

}  // namespace sqpairs
