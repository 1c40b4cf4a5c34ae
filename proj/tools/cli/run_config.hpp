#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trunc_hermite::cli {

enum class Command { moments, gamma, quad, eval, stieltjes, series, verify };
enum class Format { json, csv };

/// Everything a single invocation needs; decimals stay strings until the
/// working precision is known.
struct RunConfig {
  Command command = Command::verify;
  std::string z;
  std::optional<int> n;
  std::optional<int> n_max;
  int k_max = 20;
  std::optional<std::string> method;
  std::optional<int> digits;
  std::optional<std::string> tol;
  Format format = Format::json;
  std::string out;  // empty: standard output

  std::optional<std::string> cache_dir;
  bool use_cache = true;

  // evaluation grids
  std::optional<std::string> x;
  std::optional<std::string> x_min;
  std::optional<std::string> x_max;
  std::optional<std::string> t;
  std::optional<std::string> t_min;
  std::optional<std::string> t_max;
  int points = 21;
  bool alpha = false;
};

/// Bad flag value or combination; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kSuccess = 0, kUsage = 1, kCheckFailed = 2, kNumerical = 3 };

/// Parses argv (subcommand first). Throws UsageError. Returns nullopt when
/// help was printed.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::string& help_text);

}  // namespace trunc_hermite::cli
