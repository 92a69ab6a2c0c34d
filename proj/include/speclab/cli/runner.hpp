#ifndef SPECLAB_CLI_RUNNER_HPP
#define SPECLAB_CLI_RUNNER_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace speclab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Wrong invocation (unknown subcommand); maps to kExitUsage.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::string subcommand;
  std::filesystem::path config_path;
  std::filesystem::path out_dir = ".";
  std::optional<std::uint64_t> seed_override;
  std::optional<std::size_t> workers_override;
};

/// Loads the config, applies overrides, runs the subcommand, and writes
/// report.json + CSV tables + SVG plots into out_dir. Throws:
///   usage_error                          -> unknown subcommand
///   std::invalid_argument / domain_error -> validation failure
///   numerical_error / embedding_error    -> numerical failure
void run_subcommand(const RunOptions& options, std::ostream& log);

/// Exception-to-exit-code wrapper for main(): 0 ok, 1 usage, 2 validation,
/// 3 numerical.
int run(const RunOptions& options, std::ostream& log, std::ostream& err);

}  // namespace speclab::cli

#endif  // SPECLAB_CLI_RUNNER_HPP
