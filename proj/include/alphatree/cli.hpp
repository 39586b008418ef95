#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alphatree/bounds.hpp"
#include "alphatree/feasibility.hpp"

namespace alphatree {

enum class OutputFormat { kJson, kTable, kCsv };

struct RunConfig {
  /// encode | bst | bounds | check-lengths | tree-from-lengths | oracle | bench
  std::string subcommand;
  std::optional<std::string> input_path;
  std::optional<std::string> inline_json;
  /// Unset means JSON, or CSV for bench.
  std::optional<OutputFormat> format;
  /// Accept float probabilities and rescale them when within 1e-12 of summing to 1.
  bool float_input = false;
  std::vector<std::size_t> bench_sizes;
  std::uint64_t seed = 0;
  /// Oracle BST DP with monotone root ranges.
  bool fast_bst_dp = false;
  /// alphabetic | bst | feasible | dyadic-fillers
  std::string oracle_mode = "alphabetic";
  std::optional<Length> x_max;
};

struct RunResult {
  int status = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitContractViolation = 2;

/// Throws InvalidInput for an unknown subcommand or mode, or bench sizes that
/// are not strictly increasing.
void validate(const RunConfig& config);

/// Executes one subcommand. Input comes from inline JSON, the input path, or
/// `in`, in that order. Never throws.
RunResult run(const RunConfig& config, std::istream& in);

/// Fixed-width table: entropy first, then one row per bound with its formula,
/// value, applicability and, when `cost` is given, whether the cost meets it.
std::string render_report(const BoundsReport& report, const std::optional<Rational>& cost = {});

/// Parses a command line. Help output and usage errors come back as a RunResult.
std::variant<RunConfig, RunResult> parse_command_line(int argc, const char* const* argv);

}  // namespace alphatree
