#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "owf/io.hpp"
#include "owf_cli/report.hpp"

namespace owf::cli {

struct Options {
  std::optional<std::string> config_path;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> samples;
  std::optional<int> radius;
  std::optional<int> levels;
  std::optional<int> depth;
  std::optional<std::size_t> count;
  double bias = 0.5;
  bool json = false;
};

// Thrown for arguments that parse but make no sense (exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& suite_names();

Report verify(const std::string& suite, const LoadedConfig& config, const Options& options);
Report factor_demo(const LoadedConfig& config, const Options& options);
Report kernel(const LoadedConfig& config, const Options& options);
// delta, gamma or transversal as a JSON array.
json dump(const std::string& table, const LoadedConfig& config, const Options& options);

// Whole command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace owf::cli
