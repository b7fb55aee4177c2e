#include "sqpairs/cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sqpairs/characters.hpp"
#include "sqpairs/cli/report_io.hpp"
#include "sqpairs/errors.hpp"

namespace sqpairs::cli {

using u64 = std::uint64_t;
using nlohmann::json;

u64 parse_count(const std::string& text) {
  const std::string s = CLI::detail::trim_copy(text);
  if (s.empty()) throw ArgumentError("expected an integer, got an empty string");
  std::size_t used = 0;
  if (s.find_first_of("eE.") == std::string::npos) {
    if (s.front() == '-') throw ArgumentError("expected a non-negative integer, got '" + s + "'");
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      throw ArgumentError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw ArgumentError("not an integer: '" + s + "'");
    return v;
  }
  long double v = 0;
  try {
    v = std::stold(s, &used);
  } catch (const std::exception&) {
    throw ArgumentError("not a number: '" + s + "'");
  }
  if (used != s.size() || v < 0 || v != std::floor(v) || v > 1.8e19L) {
    throw ArgumentError("not an exact non-negative integer: '" + s + "'");
  }
  return static_cast<u64>(v);
}

std::vector<u64> parse_grid(const std::string& text) {
  std::vector<u64> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_count(item));
  if (out.empty()) throw ArgumentError("empty grid");
  return out;
}

namespace {

struct RunConfig {
  std::string format = "csv";
  std::string out_path;
  unsigned threads = 1;
  u64 segment_size = u64{1} << 22;
  bool force = false;
  bool verbose = false;
};

CountConfig count_config(const RunConfig& rc) {
  CountConfig c;
  c.sieve.segment_size = rc.segment_size;
  c.sieve.threads = rc.threads;
  c.force = rc.force;
  return c;
}

void print_error(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

// Emits a stderr warning when a guard would have tripped without --force.
void warn_forced(const RunConfig& rc, std::ostream& err, bool over_guard, const std::string& what) {
  if (rc.force && over_guard) err << "warning: --force overrides guard: " << what << '\n';
}

struct LemmaParams {
  std::string check;
  std::string x;
  std::string limit;
  std::string n_max;
  std::string a_max;
  std::string p_max;
  std::string k_max;
  std::string k;
};

u64 or_default(const std::string& text, u64 fallback) { return text.empty() ? fallback : parse_count(text); }

const std::vector<std::string>& lemma_selectors() {
  static const std::vector<std::string> names = {
      "phi-sums",        "quotient-sum",        "brun-titchmarsh", "squarefree-progressions",
      "tail-prime-sum",  "char-sum",            "rho-identities",  "mu-phi-identity",
      "omega-identity",  "phi-square-identity", "artin",           "all"};
  return names;
}

std::vector<LemmaReport> run_lemma(const std::string& name, const LemmaParams& p, const RunConfig& rc,
                                   std::ostream& err) {
  std::vector<LemmaReport> out;
  auto append = [&](const auto& reports) { out.insert(out.end(), reports.begin(), reports.end()); };
  if (name == "phi-sums") {
    append(check_phi_sums(or_default(p.x, 1000)));
  } else if (name == "quotient-sum") {
    out.push_back(check_quotient_sum(or_default(p.n_max, 2000)));
  } else if (name == "brun-titchmarsh") {
    out.push_back(check_brun_titchmarsh(or_default(p.x, 10'000)));
  } else if (name == "squarefree-progressions") {
    append(check_squarefree_progressions(or_default(p.x, 100'000), or_default(p.k_max, 10)));
  } else if (name == "tail-prime-sum") {
    out.push_back(check_tail_prime_sum(or_default(p.limit, 1'000'000)));
  } else if (name == "char-sum") {
    CharSumOptions opts;
    opts.force = rc.force;
    const u64 x = or_default(p.x, 10'000);
    warn_forced(rc, err, x > opts.max_x, "char-sum ceiling");
    append(check_char_sum(x, opts));
  } else if (name == "rho-identities") {
    out.push_back(check_rho_identities(or_default(p.a_max, 500), or_default(p.p_max, 1000)));
  } else if (name == "mu-phi-identity") {
    out.push_back(check_mu_phi_identity(or_default(p.n_max, 100'000)));
  } else if (name == "omega-identity") {
    out.push_back(check_omega_identity(or_default(p.n_max, 100'000)));
  } else if (name == "phi-square-identity") {
    out.push_back(check_phi_square_identity(or_default(p.n_max, 100'000)));
  } else if (name == "artin") {
    const u64 k = or_default(p.k, 1);
    const u64 cut = or_default(p.limit, 1'000'000);
    const ArtinResult a = artin_local_constant(k, cut);
    LemmaReport r;
    r.lemma_id = "artin";
    r.params = "k=" + std::to_string(k) + " prime_cut=" + std::to_string(cut);
    r.lhs = a.value;
    r.rhs = a.lower_bound;
    r.ratio = a.lower_bound > 0 ? a.value / a.lower_bound : 0.0;
    r.pass = std::isfinite(a.value) && a.value > 0.0;
    r.notes = "truncated product; true value in [rhs, lhs]";
    out.push_back(r);
  } else if (name == "all") {
    for (const auto& n : lemma_selectors()) {
      if (n == "all") continue;
      append(run_lemma(n, LemmaParams{}, rc, err));
    }
  } else {
    throw ArgumentError("unknown lemma check '" + name + "'");
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of prime pairs p, q <= x with (p-1)(q-1) a perfect square"};
  app.name("sqpairs");
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "Optional key=value config file; command-line flags win");

  RunConfig rc;
  if (const char* env = std::getenv("SQPAIRS_THREADS")) {
    try {
      rc.threads = static_cast<unsigned>(std::max<u64>(1, parse_count(env)));
    } catch (const ArgumentError&) {
      err << "warning: ignoring malformed SQPAIRS_THREADS\n";
    }
  }
  app.add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", rc.out_path, "Write the report to this file instead of stdout");
  app.add_option("--threads", rc.threads, "Worker threads (default: $SQPAIRS_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--segment-size", rc.segment_size, "Sieve segment length")->check(CLI::PositiveNumber);
  app.add_flag("--force", rc.force, "Override resource and cost guards");
  app.add_flag("--verbose", rc.verbose, "Include timings and group member lists");

  std::string x_text;
  std::string grid_text;
  std::string policy_text = "log-squared";
  bool verify = false;
  std::int64_t shift = 0;
  unsigned k = 2;
  u64 prime_limit = 1'000'000;
  LemmaParams lp;

  auto* count = app.add_subcommand("count", "S(x), S'(x) and group statistics");
  count->add_option("--x", x_text, "Upper bound x")->required();
  auto* scan = app.add_subcommand("scan", "S(x) ln(x)/x and Landau comparison over a grid");
  scan->add_option("--grid", grid_text, "Comma-separated increasing x values");
  scan->add_option("--x", x_text, "Single x (alternative to --grid)");
  scan->add_option("--prime-limit", prime_limit, "Prime cut for the singular series");
  auto* windows = app.add_subcommand("windows", "Dyadic-window lower-bound construction");
  windows->add_option("--x", x_text, "Upper bound x")->required();
  windows->add_option("--policy", policy_text, "Window collection: log-squared, sixth-root or sqrt");
  windows->add_flag("--verify", verify, "Assert aggregate <= S(x+1)");
  auto* lemmas = app.add_subcommand("lemmas", "Numerical lemma checks");
  lemmas->add_option("--check", lp.check, "Check name or 'all'")->required();
  lemmas->add_option("--x", lp.x, "x parameter");
  lemmas->add_option("--limit", lp.limit, "Prime limit");
  lemmas->add_option("--n-max", lp.n_max, "n_max parameter");
  lemmas->add_option("--a-max", lp.a_max, "a_max parameter");
  lemmas->add_option("--p-max", lp.p_max, "p_max parameter");
  lemmas->add_option("--k-max", lp.k_max, "k_max parameter");
  lemmas->add_option("--k", lp.k, "Modulus for the artin check");
  auto* landau = app.add_subcommand("landau", "Landau n^2+1 heuristic against the exact count");
  landau->add_option("--x", x_text, "Upper bound x")->required();
  landau->add_option("--prime-limit", prime_limit, "Prime cut for the singular series");
  auto* shifted = app.add_subcommand("shifted", "Pairs with (p+b)(q+b) a perfect square");
  shifted->add_option("--x", x_text, "Upper bound x")->required();
  shifted->add_option("--b", shift, "Nonzero shift b")->required();
  auto* kfold = app.add_subcommand("kfold", "k-sets with prod (p-1) a perfect k-th power");
  kfold->add_option("--x", x_text, "Upper bound x")->required();
  kfold->add_option("--k", k, "k in [2, 5]")->required();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "argument", e.what());
    return kArgumentError;
  }

  std::string payload;
  int code = kOk;
  const bool as_json = rc.format == "json";
  try {
    const CountConfig cc = count_config(rc);
    if (count->parsed()) {
      const u64 x = parse_count(x_text);
      warn_forced(rc, err, x > cc.max_x, "count ceiling");
      const PairCountReport report = count_pairs_grouped(x, cc);
      if (as_json) {
        json j = report;
        if (!rc.verbose) {
          j.erase("elapsed_seconds");
        } else {
          warn_forced(rc, err, x > kMaxVerboseX, "verbose member lists");
          const auto index = build_pair_groups(x, cc, true);
          json groups = json::array();
          for (const auto& [kernel, g] : index.groups) {
            if (g >= 2) groups.push_back({{"kernel", kernel}, {"members", index.members_of(kernel)}});
          }
          j["groups"] = groups;
        }
        payload = j.dump(2) + "\n";
      } else {
        payload = count_csv(report);
      }
      if (rc.verbose) err << "elapsed_seconds=" << report.elapsed_seconds << '\n';
    } else if (scan->parsed()) {
      const std::vector<u64> grid = !grid_text.empty() ? parse_grid(grid_text)
                                    : !x_text.empty()  ? std::vector<u64>{parse_count(x_text)}
                                                       : throw ArgumentError("scan needs --grid or --x");
      warn_forced(rc, err, grid.back() > cc.max_x, "scan ceiling");
      const RatioSeries series = ratio_scan(grid, cc);
      const double singular = singular_series(prime_limit).value;
      std::vector<ScanRow> rows;
      for (const auto& p : series.points) {
        ScanRow row;
        row.x = p.x;
        row.s_x = p.s_x;
        row.s_prime_x = count_products(p.x);
        row.ratio = p.ratio;
        row.landau_count = landau_count(p.x);
        row.landau_heuristic = 0.5 * singular * log_integral_from_2(std::sqrt(static_cast<double>(p.x)));
        rows.push_back(row);
      }
      payload = as_json ? scan_json(rows, series).dump(2) + "\n" : scan_csv(rows);
    } else if (windows->parsed()) {
      const u64 x = parse_count(x_text);
      const WindowPolicy policy = parse_window_policy(policy_text);
      const LowerBoundResult result = lower_bound_construction(x, policy, rc.threads);
      if (result.empty_collection) {
        err << "warning: empty window collection for x=" << x << " under policy " << to_string(policy) << '\n';
      }
      for (const auto& w : result.windows) {
        if (!w.cauchy_schwarz_holds) code = kVerificationFailure;
      }
      if (verify) {
        const u64 s = count_pairs_grouped(x + 1, cc).s_x;
        const bool ok = result.aggregate <= s;
        err << "verify: aggregate=" << result.aggregate << " S(x+1)=" << s << (ok ? " ok" : " FAILED") << '\n';
        if (!ok) code = kVerificationFailure;
      }
      payload = as_json ? windows_json(result).dump(2) + "\n" : windows_csv(result);
    } else if (lemmas->parsed()) {
      const auto reports = run_lemma(lp.check, lp, rc, err);
      for (const auto& r : reports) {
        if (r.theorem_grade && !r.pass) code = kVerificationFailure;
      }
      payload = as_json ? json(reports).dump(2) + "\n" : lemmas_csv(reports);
    } else if (landau->parsed()) {
      const u64 x = parse_count(x_text);
      const SeriesResult series = singular_series(prime_limit);
      const double heuristic = landau_heuristic(static_cast<double>(x), prime_limit);
      const u64 actual = landau_count(x);
      if (as_json) {
        payload = json{{"x", x},
                       {"landau_count", actual},
                       {"landau_heuristic", heuristic},
                       {"singular_series", series.value},
                       {"singular_terms", series.terms},
                       {"tail_estimate", series.tail_estimate}}
                      .dump(2) +
                  "\n";
      } else {
        payload = "x,landau_count,landau_heuristic,singular_series,singular_terms,tail_estimate\n" +
                  std::to_string(x) + "," + std::to_string(actual) + "," + format_double(heuristic) + "," +
                  format_double(series.value) + "," + std::to_string(series.terms) + "," +
                  format_double(series.tail_estimate) + "\n";
      }
    } else if (shifted->parsed()) {
      const u64 x = parse_count(x_text);
      warn_forced(rc, err, x > cc.max_x, "shifted ceiling");
      const u64 c = count_shifted_pairs(x, shift, cc);
      payload = as_json ? json{{"x", x}, {"b", shift}, {"count", c}}.dump(2) + "\n"
                        : "x,b,count\n" + std::to_string(x) + "," + std::to_string(shift) + "," +
                              std::to_string(c) + "\n";
    } else if (kfold->parsed()) {
      const u64 x = parse_count(x_text);
      KfoldOptions opts;
      opts.force = rc.force;
      const u64 c = count_kfold(x, k, opts);
      payload = as_json ? json{{"x", x}, {"k", k}, {"count", c}}.dump(2) + "\n"
                        : "x,k,count\n" + std::to_string(x) + "," + std::to_string(k) + "," +
                              std::to_string(c) + "\n";
    }
  } catch (const ArgumentError& e) {
    print_error(err, "argument", e.what());
    return kArgumentError;
  } catch (const ResourceError& e) {
    print_error(err, "resource", e.what());
    return kResourceError;
  }

  if (rc.out_path.empty()) {
    out << payload;
  } else {
    std::ofstream file(rc.out_path, std::ios::binary);
    if (!file) {
      print_error(err, "argument", "cannot open output file '" + rc.out_path + "'");
      return kArgumentError;
    }
    file << payload;
  }
  return code;
}

}  // namespace sqpairs::cli
