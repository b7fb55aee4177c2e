#pragma once

// CSV and JSON encodings for the report types. CSV: '.' decimal point, no
// thousands separators, LF line endings, shortest round-trip doubles.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqpairs/lemmas.hpp"
#include "sqpairs/pair_counter.hpp"
#include "sqpairs/windows.hpp"

namespace sqpairs {

void to_json(nlohmann::json& j, const PairCountReport& r);
void from_json(const nlohmann::json& j, PairCountReport& r);
void to_json(nlohmann::json& j, const LemmaReport& r);
void from_json(const nlohmann::json& j, LemmaReport& r);
void to_json(nlohmann::json& j, const WindowStat& w);
void from_json(const nlohmann::json& j, WindowStat& w);

}  // namespace sqpairs

namespace sqpairs::cli {

std::string format_double(double v);
// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

struct ScanRow {
  std::uint64_t x = 0;
  std::uint64_t s_x = 0;
  std::uint64_t s_prime_x = 0;
  double ratio = 0.0;
  std::uint64_t landau_count = 0;
  double landau_heuristic = 0.0;
};

inline constexpr const char* kScanHeader = "x,s_x,s_prime_x,ratio,landau_count,landau_heuristic";
inline constexpr const char* kWindowHeader = "y,sum_N,sum_N2,pair_contrib,cs_bound";
inline constexpr const char* kLemmaHeader = "lemma_id,params,lhs,rhs,ratio,pass,theorem_grade,notes";
inline constexpr const char* kCountHeader =
    "x,s_x,s_x_unordered,s_prime_x,group_count,largest_group_kernel,largest_group_size";

std::string scan_csv(std::span<const ScanRow> rows);
nlohmann::json scan_json(std::span<const ScanRow> rows, const RatioSeries& series);

std::string windows_csv(const LowerBoundResult& result);
nlohmann::json windows_json(const LowerBoundResult& result);

std::string lemmas_csv(std::span<const LemmaReport> reports);
std::string count_csv(const PairCountReport& report);

}  // namespace sqpairs::cli
