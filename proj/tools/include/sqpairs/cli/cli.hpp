#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sqpairs::cli {

enum ExitCode : int {
  kOk = 0,
  kArgumentError = 2,
  kResourceError = 3,
  kVerificationFailure = 4,
};

// Parses "123", "1e6", "2.5e3" into an exact non-negative integer.
std::uint64_t parse_count(const std::string& text);
// Comma-separated list of parse_count values.
std::vector<std::uint64_t> parse_grid(const std::string& text);

// Entry point shared by the executable and the tests. Report output goes to
// `out` unless --out names a file; diagnostics and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqpairs::cli
