#include "sqpairs/pair_counter.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <string>

#include "sqpairs/errors.hpp"
#include "sqpairs/parallel.hpp"

namespace sqpairs {

using u64 = std::uint64_t;
using i64 = std::int64_t;

namespace {

void check_budget(u64 x, const CountConfig& config, const char* who) {
  if (x > config.max_x && !config.force) {
    throw ResourceError(std::string(who) + ": x = " + std::to_string(x) +
                        " exceeds ceiling " + std::to_string(config.max_x) + " (use force to override)");
  }
}

// Kernels of p + shift for primes p in [lo, hi).
void segment_kernels(u64 lo, u64 hi, i64 shift, std::span<const u64> base,
                     std::vector<KernelEntry>& out) {
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint8_t> flags;
  mark_primes_in_segment(lo, hi, base, flags);

  std::vector<std::uint32_t> slot(hi - lo, kNone);
  std::vector<u64> rem;
  std::vector<u64> part;
  for (u64 i = 0; i < hi - lo; ++i) {
    if (!flags[i]) continue;
    const i64 v = static_cast<i64>(lo + i) + shift;
    if (v < 1) continue;
    slot[i] = static_cast<std::uint32_t>(rem.size());
    rem.push_back(static_cast<u64>(v));
    part.push_back(1);
  }
  if (rem.empty()) return;

  // Values v = lo + i + shift; index of the first v >= 1 divisible by p.
  const i64 vlo = static_cast<i64>(lo) + shift;
  const u64 vmax = rem.back();
  for (u64 p : base) {
    if (p > vmax / p) break;
    const i64 first_v = vlo < 1 ? static_cast<i64>(p) : (vlo + static_cast<i64>(p) - 1) / static_cast<i64>(p) * static_cast<i64>(p);
    for (u64 i = static_cast<u64>(first_v - vlo); i < hi - lo; i += p) {
      const std::uint32_t s = slot[i];
      if (s == kNone) continue;
      u64& r = rem[s];
      unsigned e = 0;
      do {
        r /= p;
        ++e;
      } while (r % p == 0);
      if (e & 1) part[s] *= p;
    }
  }
  for (u64 i = 0; i < hi - lo; ++i) {
    const std::uint32_t s = slot[i];
    if (s == kNone) continue;
    if (rem[s] > 1) part[s] *= rem[s];
    out.push_back(KernelEntry{part[s], lo + i});
  }
}

u64 ordered_from_sorted(std::span<const KernelEntry> entries) {
  u64 total = 0;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].kernel == entries[i].kernel) ++j;
    const u64 g = j - i;
    total += g * (g - 1);
    i = j;
  }
  return total;
}

}  // namespace

std::vector<KernelEntry> collect_shifted_kernels(u64 x, i64 shift, const CountConfig& config) {
  check_budget(x, config, "collect_shifted_kernels");
  std::vector<KernelEntry> all;
  if (x < 2) return all;
  const u64 vtop = shift >= 0 ? x + static_cast<u64>(shift) : x;
  const auto base = primes_up_to(isqrt(std::max(x, vtop)));
  const u64 seg = std::max<u64>(config.sieve.segment_size, 1024);
  const u64 count = (x - 1 + seg - 1) / seg;
  std::vector<std::vector<KernelEntry>> parts(count);
  for_each_segment(2, x + 1, seg, config.sieve.threads, [&](u64 index, u64 a, u64 b) {
    segment_kernels(a, b, shift, base, parts[index]);
  });
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  all.reserve(total);
  for (auto& p : parts) {
    all.insert(all.end(), p.begin(), p.end());
    std::vector<KernelEntry>().swap(p);
  }
  std::sort(all.begin(), all.end());
  return all;
}

u64 PairGroupIndex::prime_count() const {
  u64 total = 0;
  for (const auto& [kernel, g] : groups) total += g;
  return total;
}

u64 PairGroupIndex::ordered_pairs() const {
  u64 total = 0;
  for (const auto& [kernel, g] : groups) total += g * (g - 1);
  return total;
}

std::vector<u64> PairGroupIndex::members_of(u64 kernel) const {
  std::vector<u64> out;
  auto it = std::lower_bound(members.begin(), members.end(), KernelEntry{kernel, 0});
  for (; it != members.end() && it->kernel == kernel; ++it) out.push_back(it->prime);
  return out;
}

PairGroupIndex build_pair_groups(u64 x, const CountConfig& config, bool keep_members) {
  if (keep_members && x > kMaxVerboseX && !config.force) {
    throw ResourceError("build_pair_groups: member lists are limited to x <= 1e6");
  }
  PairGroupIndex index;
  index.x = x;
  auto entries = collect_shifted_kernels(x, -1, config);
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].kernel == entries[i].kernel) ++j;
    index.groups.emplace_back(entries[i].kernel, j - i);
    i = j;
  }
  if (keep_members) index.members = std::move(entries);
  return index;
}

PairCountReport count_pairs_grouped(u64 x, const CountConfig& config) {
  if (x < 2) throw ArgumentError("count_pairs_grouped: x must be >= 2");
  const auto start = std::chrono::steady_clock::now();
  const auto index = build_pair_groups(x, config);
  PairCountReport report;
  report.x = x;
  report.group_count = index.groups.size();
  for (const auto& [kernel, g] : index.groups) {
    report.s_x += g * (g - 1);
    if (g > report.largest_group_size) {
      report.largest_group_size = g;
      report.largest_group_kernel = kernel;
    }
  }
  report.s_prime_x = count_products(x);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<u64> pair_counts_at(std::span<const u64> grid, const CountConfig& config) {
  std::vector<u64> out(grid.size(), 0);
  if (grid.empty()) return out;
  const u64 top = *std::max_element(grid.begin(), grid.end());
  const auto entries = collect_shifted_kernels(top, -1, config);
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].kernel == entries[i].kernel) ++j;
    if (j - i >= 2) {
      // Members are sorted by prime within a group.
      for (std::size_t g = 0; g < grid.size(); ++g) {
        auto end = std::upper_bound(entries.begin() + static_cast<std::ptrdiff_t>(i),
                                    entries.begin() + static_cast<std::ptrdiff_t>(j), grid[g],
                                    [](u64 v, const KernelEntry& e) { return v < e.prime; });
        const u64 c = static_cast<u64>(end - (entries.begin() + static_cast<std::ptrdiff_t>(i)));
        out[g] += c * (c - (c > 0 ? 1 : 0));
      }
    }
    i = j;
  }
  return out;
}

u64 count_pairs_bruteforce(u64 x, bool force) {
  if (x > kBruteforceGuard && !force) {
    throw ArgumentError("count_pairs_bruteforce: x = " + std::to_string(x) +
                        " exceeds the quadratic-cost guard 1e5");
  }
  const auto primes = primes_up_to(x);
  u64 count = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (i == j) continue;
      const auto product = static_cast<uint128>(primes[i] - 1) * (primes[j] - 1);
      if (is_perfect_square(product)) ++count;
    }
  }
  return count;
}

u64 count_products(u64 x) {
  if (x < 4) return 0;
  u64 count = 0;
  // n = pq with p < q forces p <= sqrt(x).
  for_each_prime(2, isqrt(x) + 1, [&](u64 p) {
    const u64 a = squarefree_part(p - 1);
    const u64 m = isqrt((p - 1) / a);
    const u64 q_max = x / p;
    if (q_max < 2) return;
    const u64 n_max = isqrt((q_max - 1) / a);
    for (u64 n = m + 1; n <= n_max; ++n) {
      if (is_prime(a * n * n + 1)) ++count;
    }
  });
  return count;
}

u64 count_shifted_pairs(u64 x, i64 b, const CountConfig& config) {
  if (b == 0) throw ArgumentError("count_shifted_pairs: b must be nonzero");
  if (x < 2) return 0;
  return ordered_from_sorted(collect_shifted_kernels(x, b, config));
}

namespace {

// Exponent vector mod k: sorted (prime, e mod k) with nonzero residues.
using ExponentClass = std::vector<std::pair<u64, unsigned>>;

ExponentClass add_classes(const ExponentClass& lhs, const ExponentClass& rhs, unsigned k) {
  ExponentClass out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].first < rhs[j].first)) {
      out.push_back(lhs[i++]);
    } else if (i == lhs.size() || rhs[j].first < lhs[i].first) {
      out.push_back(rhs[j++]);
    } else {
      const unsigned e = (lhs[i].second + rhs[j].second) % k;
      if (e) out.emplace_back(lhs[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

ExponentClass negate_class(const ExponentClass& c, unsigned k) {
  ExponentClass out = c;
  for (auto& [p, e] : out) e = k - e;
  return out;
}

u64 binomial(u64 n, unsigned r) {
  if (r > n) return 0;
  u64 out = 1;
  for (unsigned i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

u64 count_kfold(u64 x, unsigned k, const KfoldOptions& options) {
  if (k < 2 || k > 5) throw ArgumentError("count_kfold: k must be in [2, 5]");
  std::map<ExponentClass, u64> class_counts;
  for_each_prime(2, x + 1, [&](u64 p) {
    ExponentClass c;
    for (auto [q, e] : factorize(p - 1)) {
      if (e % k) c.emplace_back(q, e % k);
    }
    ++class_counts[c];
  });
  std::vector<ExponentClass> classes;
  std::vector<u64> counts;
  std::map<ExponentClass, std::size_t> ids;
  for (auto& [c, n] : class_counts) {
    ids.emplace(c, classes.size());
    classes.push_back(c);
    counts.push_back(n);
  }
  const u64 n_classes = classes.size();
  if (n_classes == 0) return 0;

  // Nondecreasing (k-1)-tuples of class ids; the k-th class is forced.
  double work = 1.0;
  for (unsigned i = 0; i + 1 < k; ++i) work *= static_cast<double>(n_classes + i) / (i + 1);
  if (work > static_cast<double>(options.max_work) && !options.force) {
    throw ResourceError("count_kfold: estimated work " + std::to_string(static_cast<u64>(work)) +
                        " exceeds budget " + std::to_string(options.max_work));
  }

  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  u64 total = 0;
  auto tally = [&] {
    u64 ways = 1;
    for (std::size_t i = 0; i < chosen.size();) {
      std::size_t j = i;
      while (j < chosen.size() && chosen[j] == chosen[i]) ++j;
      ways *= binomial(counts[chosen[i]], static_cast<unsigned>(j - i));
      if (ways == 0) return;
      i = j;
    }
    total += ways;
  };
  auto recurse = [&](auto&& self, std::size_t from, const ExponentClass& sum) -> void {
    if (chosen.size() + 1 == k) {
      auto it = ids.find(negate_class(sum, k));
      if (it == ids.end() || it->second < from) return;
      chosen.push_back(it->second);
      tally();
      chosen.pop_back();
      return;
    }
    for (std::size_t id = from; id < n_classes; ++id) {
      // Skip ids already used more often than the class has members.
      const auto used = static_cast<u64>(std::count(chosen.begin(), chosen.end(), id));
      if (used >= counts[id]) continue;
      chosen.push_back(id);
      self(self, id, add_classes(sum, classes[id], k));
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, ExponentClass{});
  return total;
}

}  // namespace sqpairs
