#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pzeta::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kVerifyFailed = 3 };

enum class Format { text, json, csv };

Format parse_format(std::string_view text);

struct RunConfig {
  int digits = 30;
  std::uint64_t sieve_limit = 100000000;
  Format format = Format::text;
  unsigned threads = 1;
  std::optional<std::string> method;
  std::optional<std::string> sieve_cache;
  std::optional<std::string> stieltjes_data;
};

// key=value lines, '#' starts a comment. Unknown keys or malformed lines
// throw ParseError.
std::map<std::string, std::string> parse_config_text(std::string_view text);

// Applies config-file values over the defaults; flag values are applied by
// the caller afterwards.
void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& kv);

// "100000000", "1e8", "1.5e6" -> integer; throws ParseError otherwise.
std::uint64_t parse_count(std::string_view text);

// Runs the command line and returns the exit code. Output goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pzeta::cli
