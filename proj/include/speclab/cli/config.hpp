#ifndef SPECLAB_CLI_CONFIG_HPP
#define SPECLAB_CLI_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "json.hpp"
#include "speclab/kernels.hpp"
#include "speclab/lab.hpp"
#include "speclab/spectral_model.hpp"
#include "speclab/trend.hpp"
#include "speclab/whittle.hpp"

namespace speclab::cli {

/// T-ladder plus grid resolution shared by every path-based experiment.
struct GridSpec {
  std::vector<double> horizons;
  std::size_t n = 4096;
};

/// Raw theorem-condition inputs for `check-conditions` runs that are not
/// tied to a concrete model/kernel pair.
struct ConditionSpec {
  DecayRate decay = DecayRate::exponential();
  double beta = 0.5;
  double gamma = 1.0;
  MemoryClass memory = MemoryClass::kShort;
};

/// Estimation setup: which family is fitted, over which box, compared
/// against which truth.
struct WhittleSpec {
  ModelFamily family = ModelFamily::ou();
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> theta_star;  // empty when no truth is declared
  std::size_t component = 0;       // parameter tracked in reports
  WeightSpec weight = WeightSpec::rational();
  NelderMeadOptions optimizer;
  bool profile_scale = true;

  WhittleConfig whittle_config() const {
    return WhittleConfig{weight, lower, upper, optimizer, profile_scale};
  }
};

/// Fully resolved experiment configuration. Sections that a subcommand does
/// not need may be absent; the require_* accessors produce targeted
/// validation errors when a needed one is missing.
struct Config {
  std::optional<SpectralModel> model;
  TrendSpec trend = TrendSpec::zero();
  SmoothingKernel kernel = SmoothingKernel::poisson();
  std::optional<GridSpec> grid;
  std::optional<WhittleSpec> whittle;
  std::optional<ConditionSpec> conditions;

  std::size_t replications = 200;
  std::size_t estimator_replications = 0;  // 0: inherit `replications`
  std::uint64_t seed = 1;
  std::size_t workers = 0;  // 0: hardware concurrency
  std::size_t simulate_paths = 3;
  bool write_samples = true;

  const SpectralModel& require_model() const;
  const GridSpec& require_grid() const;
  const WhittleSpec& require_whittle() const;
  std::size_t estimator_reps() const {
    return estimator_replications == 0 ? replications : estimator_replications;
  }

  /// Resolved-config echo embedded in every report: defaults applied,
  /// overrides folded in.
  nlohmann::json echo() const;
};

Config parse_config(const nlohmann::json& j);
Config load_config(const std::filesystem::path& file);

}  // namespace speclab::cli

#endif  // SPECLAB_CLI_CONFIG_HPP
