#include "sqpairs/cli/report_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace sqpairs {

void to_json(nlohmann::json& j, const PairCountReport& r) {
  j = nlohmann::json{{"x", r.x},
                     {"s_x", r.s_x},
                     {"s_x_unordered", r.unordered_pairs()},
                     {"s_prime_x", r.s_prime_x},
                     {"group_count", r.group_count},
                     {"largest_group_kernel", r.largest_group_kernel},
                     {"largest_group_size", r.largest_group_size},
                     {"elapsed_seconds", r.elapsed_seconds}};
}

void from_json(const nlohmann::json& j, PairCountReport& r) {
  j.at("x").get_to(r.x);
  j.at("s_x").get_to(r.s_x);
  j.at("s_prime_x").get_to(r.s_prime_x);
  j.at("group_count").get_to(r.group_count);
  j.at("largest_group_kernel").get_to(r.largest_group_kernel);
  j.at("largest_group_size").get_to(r.largest_group_size);
  r.elapsed_seconds = j.value("elapsed_seconds", 0.0);
}

void to_json(nlohmann::json& j, const LemmaReport& r) {
  j = nlohmann::json{{"lemma_id", r.lemma_id}, {"params", r.params}, {"lhs", r.lhs},
                     {"rhs", r.rhs},           {"ratio", r.ratio},   {"pass", r.pass},
                     {"theorem_grade", r.theorem_grade},             {"notes", r.notes}};
}

void from_json(const nlohmann::json& j, LemmaReport& r) {
  j.at("lemma_id").get_to(r.lemma_id);
  j.at("params").get_to(r.params);
  j.at("lhs").get_to(r.lhs);
  j.at("rhs").get_to(r.rhs);
  j.at("ratio").get_to(r.ratio);
  j.at("pass").get_to(r.pass);
  j.at("theorem_grade").get_to(r.theorem_grade);
  j.at("notes").get_to(r.notes);
}

void to_json(nlohmann::json& j, const WindowStat& w) {
  j = nlohmann::json{{"y", w.y},
                     {"sum_N", w.sum_n},
                     {"sum_N2", w.sum_n2},
                     {"pair_contrib", w.pair_contrib},
                     {"cs_bound", w.cs_bound},
                     {"cauchy_schwarz_holds", w.cauchy_schwarz_holds},
                     {"outside_sixth_root", w.outside_sixth_root}};
}

void from_json(const nlohmann::json& j, WindowStat& w) {
  j.at("y").get_to(w.y);
  j.at("sum_N").get_to(w.sum_n);
  j.at("sum_N2").get_to(w.sum_n2);
  j.at("pair_contrib").get_to(w.pair_contrib);
  j.at("cs_bound").get_to(w.cs_bound);
  j.at("cauchy_schwarz_holds").get_to(w.cauchy_schwarz_holds);
  j.at("outside_sixth_root").get_to(w.outside_sixth_root);
}

}  // namespace sqpairs

namespace sqpairs::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scan_csv(std::span<const ScanRow> rows) {
  std::ostringstream os;
  os << kScanHeader << '\n';
  for (const auto& r : rows) {
    os << r.x << ',' << r.s_x << ',' << r.s_prime_x << ',' << format_double(r.ratio) << ','
       << r.landau_count << ',' << format_double(r.landau_heuristic) << '\n';
  }
  return os.str();
}

nlohmann::json scan_json(std::span<const ScanRow> rows, const RatioSeries& series) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& r : rows) {
    points.push_back({{"x", r.x},
                      {"s_x", r.s_x},
                      {"s_prime_x", r.s_prime_x},
                      {"ratio", r.ratio},
                      {"landau_count", r.landau_count},
                      {"landau_heuristic", r.landau_heuristic}});
  }
  return {{"points", points},
          {"min_ratio", series.min_ratio},
          {"max_ratio", series.max_ratio},
          {"spread", series.spread}};
}

std::string windows_csv(const LowerBoundResult& result) {
  std::ostringstream os;
  os << kWindowHeader << '\n';
  for (const auto& w : result.windows) {
    os << w.y << ',' << w.sum_n << ',' << w.sum_n2 << ',' << w.pair_contrib << ','
       << format_double(w.cs_bound) << '\n';
  }
  os << "aggregate,,," << result.aggregate << ",\n";
  return os.str();
}

nlohmann::json windows_json(const LowerBoundResult& result) {
  return {{"x", result.x},
          {"policy", to_string(result.policy)},
          {"windows", result.windows},
          {"aggregate", result.aggregate},
          {"normalized", result.normalized},
          {"empty_collection", result.empty_collection}};
}

std::string lemmas_csv(std::span<const LemmaReport> reports) {
  std::ostringstream os;
  os << kLemmaHeader << '\n';
  for (const auto& r : reports) {
    os << csv_field(r.lemma_id) << ',' << csv_field(r.params) << ',' << format_double(r.lhs) << ','
       << format_double(r.rhs) << ',' << format_double(r.ratio) << ',' << (r.pass ? "true" : "false") << ','
       << (r.theorem_grade ? "true" : "false") << ',' << csv_field(r.notes) << '\n';
  }
  return os.str();
}

std::string count_csv(const PairCountReport& r) {
  std::ostringstream os;
  os << kCountHeader << '\n'
     << r.x << ',' << r.s_x << ',' << r.unordered_pairs() << ',' << r.s_prime_x << ',' << r.group_count << ','
     << r.largest_group_kernel << ',' << r.largest_group_size << '\n';
  return os.str();
}

}  // namespace sqpairs::cli
