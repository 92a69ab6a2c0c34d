#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "speclab/cli/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "speclab: frequency-domain estimation lab for trend-contaminated "
      "stationary processes"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;

  const auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "experiment config (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory (default: cwd)");
    sub->add_option("--seed", seed, "override the config base seed");
    sub->add_option("--workers", workers, "override the worker count");
    return sub;
  };

  add("simulate", "sample Gaussian paths (optionally trend-contaminated)");
  add("periodogram", "periodogram of one path per horizon, with functionals");
  add("estimate", "Whittle fits on clean paths across the horizon ladder");
  add("check-conditions", "evaluate the robustness theorem's hypotheses");
  add("robustness",
      "deterministic proof quantities + paired-seed Monte Carlo experiments");
  add("clt", "smoothed-functional CLT check against N(0, sigma^2)");

  CLI11_PARSE(app, argc, argv);

  speclab::cli::RunOptions options;
  options.subcommand = app.get_subcommands().front()->get_name();
  options.config_path = config_path;
  options.out_dir = out_dir;
  options.seed_override = seed;
  options.workers_override = workers;
  return speclab::cli::run(options, std::cout, std::cerr);
}
