#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lamsol/arith.hpp"

namespace lamsol::cli {

enum class OutputFormat { Plain, Json, Dot };

struct RunConfig {
  std::string subcommand;
  OutputFormat format = OutputFormat::Plain;
  unsigned workers = 1;
  u64 seed = kDefaultFactorSeed;
  bool long_run = false;
  std::optional<std::filesystem::path> cache_path;
  std::optional<std::filesystem::path> checkpoint_path;
  std::optional<std::filesystem::path> resume_path;
  std::optional<std::filesystem::path> log_path;
  std::optional<std::filesystem::path> dump_path;

  // Subcommand arguments; only the ones a subcommand declares are meaningful.
  u64 n = 0;       // q, t, x or bound, depending on the subcommand
  u64 p = 0;
  u64 a = 0;
  u64 x = 0;
  u64 m = 0;
  u64 b = 0;
  u64 w = 0;
  u64 v = 0;
  double s = 0;
  double alpha = 0;
  double eps = 0.25;
  double C = 7.37;
  std::optional<u64> limit;
  std::optional<u64> a1_bound;
  std::optional<u64> pp_bound;
  std::optional<u64> extended_limit;
  std::optional<std::string> stop_after;
  std::optional<std::string> filter;
  std::optional<std::string> witness_step;
  bool census_ge = false;
  unsigned max_iters = 64;
};

/// Bounds that need --long.
inline constexpr u64 kLongA1Bound = 1'000'000;
inline constexpr u64 kLongPPBound = 10'000'000;

/// Parses and runs one command line. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already parsed and validated configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses "p^a" or "p".
PrimePower parse_prime_power(const std::string& text);

}  // namespace lamsol::cli
