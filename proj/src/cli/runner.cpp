#include "speclab/cli/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "json.hpp"
#include "speclab/cli/config.hpp"
#include "speclab/cli/reports.hpp"
#include "speclab/cli/svg.hpp"
#include "speclab/errors.hpp"
#include "speclab/lab.hpp"
#include "speclab/periodogram.hpp"
#include "speclab/rng.hpp"
#include "speclab/sampling.hpp"

namespace speclab::cli {

namespace {

using nlohmann::json;

std::string t_label(double horizon) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%g", horizon);
  return buffer;
}

std::vector<double> midpoint(const WhittleSpec& spec) {
  std::vector<double> init(spec.lower.size());
  for (std::size_t i = 0; i < init.size(); ++i) {
    init[i] = 0.5 * (spec.lower[i] + spec.upper[i]);
  }
  return init;
}

/// Thinned (t, value) series so path plots stay small.
PlotSeries path_series(const std::string& label, const SampledPath& path) {
  PlotSeries series{label, {}, {}};
  const std::size_t stride = std::max<std::size_t>(1, path.grid.n / 1024);
  for (std::size_t k = 0; k < path.grid.n; k += stride) {
    series.x.push_back(path.grid.time(k));
    series.y.push_back(path.values[k]);
  }
  return series;
}

void run_simulate(Config& cfg, const RunOptions& opts, std::ostream& log,
                  json& report) {
  const GridSpec& grid = cfg.require_grid();
  const SpectralModel& model = cfg.require_model();
  const bool with_trend = cfg.trend.form != TrendForm::kZero;

  json ladder = json::array();
  for (std::size_t idx = 0; idx < grid.horizons.size(); ++idx) {
    const double horizon = grid.horizons[idx];
    const std::string label = t_label(horizon);
    const SamplingGrid g(horizon, grid.n);
    const PathSampler sampler(model, g);

    std::vector<CsvColumn> columns;
    CsvColumn time{"t", {}};
    for (std::size_t k = 0; k < g.n; ++k) time.values.push_back(g.time(k));
    columns.push_back(std::move(time));

    std::vector<PlotSeries> plot;
    json paths = json::array();
    for (std::size_t p = 0; p < cfg.simulate_paths; ++p) {
      const std::uint64_t seed =
          derive_seed(cfg.seed, idx * cfg.simulate_paths + p);
      const SampledPath clean = sampler.sample(seed);
      json entry{{"seed", seed},
                 {"summary", to_json(summarize(clean.values))}};
      columns.push_back({"y" + std::to_string(p), clean.values});
      if (with_trend) {
        const SampledPath dirty = contaminate(clean, cfg.trend);
        columns.push_back({"x" + std::to_string(p), dirty.values});
        entry["summary_contaminated"] = to_json(summarize(dirty.values));
        if (p == 0) {
          plot.push_back(path_series("contaminated", dirty));
        }
      }
      if (p == 0) plot.push_back(path_series("clean", clean));
      paths.push_back(std::move(entry));
    }

    write_csv(opts.out_dir / ("paths_T" + label + ".csv"), columns);
    write_line_plot(opts.out_dir / ("path_T" + label + ".svg"),
                    "sample path, T=" + label, "t", "value", plot);
    ladder.push_back(json{{"horizon", horizon},
                          {"n", g.n},
                          {"dt", g.dt()},
                          {"embedding_size", sampler.embedding_size()},
                          {"paths", paths}});
    log << "simulate: T=" << label << " wrote " << cfg.simulate_paths
        << " path(s), embedding size " << sampler.embedding_size() << "\n";
  }
  report["ladder"] = ladder;
}

void run_periodogram(Config& cfg, const RunOptions& opts, std::ostream& log,
                     json& report) {
  const GridSpec& grid = cfg.require_grid();
  const SpectralModel& model = cfg.require_model();
  const bool with_trend = cfg.trend.form != TrendForm::kZero;

  json ladder = json::array();
  for (std::size_t idx = 0; idx < grid.horizons.size(); ++idx) {
    const double horizon = grid.horizons[idx];
    const std::string label = t_label(horizon);
    const SamplingGrid g(horizon, grid.n);
    const PathSampler sampler(model, g);
    const std::uint64_t seed = derive_seed(cfg.seed, idx);
    const SampledPath clean = sampler.sample(seed);
    const Periodogram pg = compute_periodogram(clean);
    const std::vector<double> g_table = tabulate_kernel(g, cfg.kernel);

    std::vector<double> density(pg.frequencies.size());
    for (std::size_t m = 0; m < density.size(); ++m) {
      try {
        density[m] = model.density(pg.frequencies[m]);
      } catch (const std::domain_error&) {
        density[m] = std::numeric_limits<double>::quiet_NaN();  // origin pole
      }
    }

    std::vector<CsvColumn> columns{{"lambda", pg.frequencies},
                                   {"ordinate", pg.ordinates},
                                   {"density", density},
                                   {"kernel_g", g_table}};

    const double integral =
        smoothed_functional(pg, [](double) { return 1.0; });
    const double mean_square =
        std::accumulate(clean.values.begin(), clean.values.end(), 0.0,
                        [](double acc, double v) { return acc + v * v; }) /
        static_cast<double>(g.n);
    const double smoothed = smoothed_functional(pg, g_table);
    const double qform = quadratic_form_functional(clean, cfg.kernel);

    json entry{{"horizon", horizon},
               {"n", g.n},
               {"seed", seed},
               {"integral_periodogram", json_number(integral)},
               {"mean_square_time", json_number(mean_square)},
               {"parseval_rel_gap",
                json_number(std::abs(integral - mean_square) / mean_square)},
               {"smoothed_functional", json_number(smoothed)},
               {"quadratic_form", json_number(qform)},
               {"duality_rel_gap",
                json_number(std::abs(smoothed - qform) /
                            std::max(std::abs(smoothed), 1e-300))}};

    std::vector<PlotSeries> plot(2);
    plot[0].label = "log10 periodogram";
    plot[1].label = "log10 density";
    for (std::size_t m = pg.zero_index() + 1; m < pg.frequencies.size(); ++m) {
      const double lambda = pg.frequencies[m];
      if (pg.ordinates[m] > 0.0) {
        plot[0].x.push_back(std::log10(lambda));
        plot[0].y.push_back(std::log10(pg.ordinates[m]));
      }
      if (std::isfinite(density[m]) && density[m] > 0.0) {
        plot[1].x.push_back(std::log10(lambda));
        plot[1].y.push_back(std::log10(density[m]));
      }
    }

    if (with_trend) {
      const SampledPath dirty = contaminate(clean, cfg.trend);
      const Periodogram pgx = compute_periodogram(dirty);
      columns.push_back({"ordinate_contaminated", pgx.ordinates});
      const double smoothed_x = smoothed_functional(pgx, g_table);
      entry["smoothed_functional_contaminated"] = json_number(smoothed_x);
      entry["difference_statistic"] =
          json_number(std::sqrt(horizon) * (smoothed_x - smoothed));
    }

    write_csv(opts.out_dir / ("periodogram_T" + label + ".csv"), columns);
    write_line_plot(opts.out_dir / ("periodogram_T" + label + ".svg"),
                    "periodogram vs density, T=" + label, "log10 lambda",
                    "log10 value", plot);
    ladder.push_back(std::move(entry));
    log << "periodogram: T=" << label << " Parseval gap "
        << std::abs(integral - mean_square) / mean_square << "\n";
  }
  report["ladder"] = ladder;
}

void run_estimate(Config& cfg, const RunOptions& opts, std::ostream& log,
                  json& report) {
  const GridSpec& grid = cfg.require_grid();
  const SpectralModel& model = cfg.require_model();
  const WhittleSpec& spec = cfg.require_whittle();
  const WhittleConfig wcfg = spec.whittle_config();
  const std::vector<double> init = midpoint(spec);
  const std::size_t reps = std::max<std::size_t>(1, cfg.replications);
  const bool with_truth = !spec.theta_star.empty();

  json ladder = json::array();
  std::vector<double> t_axis, median_errors;
  for (std::size_t idx = 0; idx < grid.horizons.size(); ++idx) {
    const double horizon = grid.horizons[idx];
    const std::string label = t_label(horizon);
    const SamplingGrid g(horizon, grid.n);
    const PathSampler sampler(model, g);

    const std::size_t dim = spec.family.dimension();
    std::vector<CsvColumn> columns{{"rep", {}},
                                   {"converged", {}},
                                   {"boundary_hit", {}},
                                   {"evals", {}},
                                   {"objective", {}}};
    for (std::size_t i = 0; i < dim; ++i) {
      columns.push_back({"theta_" + spec.family.parameter_names()[i], {}});
    }

    json records = json::array();
    std::vector<double> errors;
    std::size_t converged = 0;
    for (std::size_t r = 0; r < reps; ++r) {
      const std::uint64_t seed = derive_seed(cfg.seed, idx * reps + r);
      const SampledPath path = sampler.sample(seed);
      const EstimateResult fit =
          estimate(compute_periodogram(path), spec.family, wcfg, init);
      json record = to_json(fit);
      record["seed"] = seed;
      records.push_back(std::move(record));

      columns[0].values.push_back(static_cast<double>(r));
      columns[1].values.push_back(fit.converged ? 1.0 : 0.0);
      columns[2].values.push_back(fit.boundary_hit ? 1.0 : 0.0);
      columns[3].values.push_back(static_cast<double>(fit.evaluations));
      columns[4].values.push_back(fit.objective);
      for (std::size_t i = 0; i < dim; ++i) {
        columns[5 + i].values.push_back(fit.theta_hat[i]);
      }
      if (fit.converged) {
        ++converged;
        if (with_truth) {
          errors.push_back(std::abs(fit.theta_hat[spec.component] -
                                    spec.theta_star[spec.component]));
        }
      }
    }

    json entry{{"horizon", horizon},
               {"replications", reps},
               {"converged", converged},
               {"records", records}};
    if (with_truth && !errors.empty()) {
      const double med = median(errors);
      entry["median_abs_err"] = json_number(med);
      t_axis.push_back(horizon);
      median_errors.push_back(med);
    }
    write_csv(opts.out_dir / ("estimates_T" + label + ".csv"), columns);
    ladder.push_back(std::move(entry));
    log << "estimate: T=" << label << " converged " << converged << "/"
        << reps << "\n";
  }
  if (t_axis.size() >= 2) {
    write_line_plot(opts.out_dir / "estimate_error.svg",
                    "median absolute error vs T", "T", "median |theta - truth|",
                    {PlotSeries{"median abs err", t_axis, median_errors}});
  }
  report["ladder"] = ladder;
}

void run_check_conditions(Config& cfg, const RunOptions& /*opts*/,
                          std::ostream& log, json& report) {
  ConditionReport result;
  if (cfg.conditions) {
    const ConditionSpec& spec = *cfg.conditions;
    result = check_conditions(spec.decay, spec.beta, spec.gamma, spec.memory);
  } else {
    result = check_conditions(cfg.require_model(), cfg.trend, cfg.kernel);
  }
  report["conditions"] = to_json(result);
  log << "check-conditions: verdict " << to_string(result.verdict)
      << " (base=" << (result.base ? "yes" : "no")
      << ", case_i=" << (result.case_i ? "yes" : "no")
      << ", case_ii=" << (result.case_ii ? "yes" : "no") << ")\n";
}

void run_robustness(Config& cfg, const RunOptions& opts, std::ostream& log,
                    json& report) {
  const GridSpec& grid = cfg.require_grid();
  const SpectralModel& model = cfg.require_model();
  const WhittleSpec& spec = cfg.require_whittle();
  if (spec.theta_star.empty()) {
    throw std::invalid_argument(
        "config: robustness requires whittle.theta_star");
  }
  const WhittleConfig wcfg = spec.whittle_config();

  report["conditions"] = to_json(check_conditions(model, cfg.trend, cfg.kernel));

  json ladder = json::array();
  std::vector<CsvColumn> table{{"horizon", {}},
                               {"trend_term", {}},
                               {"j_value", {}},
                               {"j_over_t", {}},
                               {"mean_s", {}},
                               {"mean_abs_s", {}},
                               {"se_s", {}},
                               {"median_abs_diff", {}},
                               {"median_abs_err_clean", {}},
                               {"median_abs_err_contaminated", {}}};
  for (std::size_t idx = 0; idx < grid.horizons.size(); ++idx) {
    const double horizon = grid.horizons[idx];
    const std::string label = t_label(horizon);
    const SamplingGrid g(horizon, grid.n);

    const double trend_term =
        trend_trend_term(cfg.trend, cfg.kernel, horizon);
    const VarianceBound vb =
        variance_bound_term(cfg.trend, cfg.kernel, model, horizon);
    const McReport diff = mc_difference_functional(
        model, cfg.trend, cfg.kernel, g, cfg.replications,
        derive_seed(cfg.seed, 2 * idx), cfg.workers);
    const McReport est = mc_estimator_robustness(
        spec.family, spec.theta_star, cfg.trend, wcfg, g, cfg.estimator_reps(),
        derive_seed(cfg.seed, 2 * idx + 1), cfg.workers, spec.component);

    ladder.push_back(json{{"horizon", horizon},
                          {"trend_term", json_number(trend_term)},
                          {"variance_bound",
                           json{{"j_value", json_number(vb.j_value)},
                                {"j_over_t", json_number(vb.j_over_t)}}},
                          {"difference", to_json(diff)},
                          {"estimator", to_json(est)}});

    table[0].values.push_back(horizon);
    table[1].values.push_back(trend_term);
    table[2].values.push_back(vb.j_value);
    table[3].values.push_back(vb.j_over_t);
    table[4].values.push_back(diff.summary.mean);
    table[5].values.push_back(diff.summary.mean_abs);
    table[6].values.push_back(diff.summary.se);
    table[7].values.push_back(est.extra.at("median_abs_diff"));
    table[8].values.push_back(est.extra.at("median_abs_err_clean"));
    table[9].values.push_back(est.extra.at("median_abs_err_contaminated"));

    if (cfg.write_samples) {
      write_csv(opts.out_dir / ("difference_samples_T" + label + ".csv"),
                {{"s", diff.samples}});
      std::vector<CsvColumn> est_columns{{"abs_diff", est.samples}};
      for (const auto& [name, values] : est.series) {
        est_columns.push_back({name, values});
      }
      write_csv(opts.out_dir / ("estimator_samples_T" + label + ".csv"),
                est_columns);
    }
    log << "robustness: T=" << label << " D=" << trend_term
        << " J/T=" << vb.j_over_t << " mean|S|=" << diff.summary.mean_abs
        << " median|dtheta|=" << est.extra.at("median_abs_diff") << "\n";
  }
  write_csv(opts.out_dir / "ladder.csv", table);

  if (grid.horizons.size() >= 2) {
    write_line_plot(opts.out_dir / "robustness_deterministic.svg",
                    "deterministic proof quantities", "T", "value",
                    {PlotSeries{"D(T)", table[0].values, table[1].values},
                     PlotSeries{"J(T)/T", table[0].values, table[3].values}});
    write_line_plot(opts.out_dir / "robustness_difference.svg",
                    "paired difference functional", "T", "mean |S|",
                    {PlotSeries{"mean |S|", table[0].values, table[5].values}});
    write_line_plot(
        opts.out_dir / "robustness_estimator.svg",
        "estimator contamination effect", "T", "median abs value",
        {PlotSeries{"|theta_X - theta_Y|", table[0].values, table[7].values},
         PlotSeries{"|theta_Y - truth|", table[0].values, table[8].values},
         PlotSeries{"|theta_X - truth|", table[0].values, table[9].values}});
  }
  report["ladder"] = ladder;
}

void run_clt(Config& cfg, const RunOptions& opts, std::ostream& log,
             json& report) {
  const GridSpec& grid = cfg.require_grid();
  const SpectralModel& model = cfg.require_model();

  json ladder = json::array();
  std::vector<CsvColumn> table{{"horizon", {}}, {"sigma2", {}},
                               {"ks_statistic", {}}, {"ks_p_value", {}},
                               {"variance_ratio", {}}, {"mean", {}},
                               {"se", {}}};
  for (std::size_t idx = 0; idx < grid.horizons.size(); ++idx) {
    const double horizon = grid.horizons[idx];
    const std::string label = t_label(horizon);
    const SamplingGrid g(horizon, grid.n);
    const McReport mc = mc_clt(model, cfg.kernel, g, cfg.replications,
                               derive_seed(cfg.seed, idx), cfg.workers);

    ladder.push_back(json{{"horizon", horizon}, {"clt", to_json(mc)}});
    table[0].values.push_back(horizon);
    table[1].values.push_back(mc.extra.at("sigma2"));
    table[2].values.push_back(mc.ks ? mc.ks->statistic : 0.0);
    table[3].values.push_back(mc.ks ? mc.ks->p_value : 0.0);
    table[4].values.push_back(mc.extra.at("variance_ratio"));
    table[5].values.push_back(mc.summary.mean);
    table[6].values.push_back(mc.summary.se);

    if (cfg.write_samples) {
      write_csv(opts.out_dir / ("clt_samples_T" + label + ".csv"),
                {{"s", mc.samples}});
    }
    log << "clt: T=" << label << " KS p=" << (mc.ks ? mc.ks->p_value : 0.0)
        << " variance ratio " << mc.extra.at("variance_ratio") << "\n";
  }
  write_csv(opts.out_dir / "ladder.csv", table);

  if (grid.horizons.size() >= 2) {
    write_line_plot(opts.out_dir / "clt_variance_ratio.svg",
                    "sample variance / sigma^2 vs T", "T", "ratio",
                    {PlotSeries{"variance ratio", table[0].values,
                                table[4].values}});
    write_line_plot(opts.out_dir / "clt_ks_p.svg",
                    "KS p-value vs T", "T", "p-value",
                    {PlotSeries{"KS p", table[0].values, table[3].values}});
  }
  report["ladder"] = ladder;
}

}  // namespace

void run_subcommand(const RunOptions& options, std::ostream& log) {
  using Handler =
      std::function<void(Config&, const RunOptions&, std::ostream&, json&)>;
  static const std::map<std::string, Handler> handlers{
      {"simulate", run_simulate},
      {"periodogram", run_periodogram},
      {"estimate", run_estimate},
      {"check-conditions", run_check_conditions},
      {"robustness", run_robustness},
      {"clt", run_clt}};

  const auto handler = handlers.find(options.subcommand);
  if (handler == handlers.end()) {
    throw usage_error("unknown subcommand '" + options.subcommand + "'");
  }

  Config cfg = load_config(options.config_path);
  if (options.seed_override) cfg.seed = *options.seed_override;
  if (options.workers_override) cfg.workers = *options.workers_override;
  std::filesystem::create_directories(options.out_dir);

  json report;
  report["command"] = options.subcommand;
  handler->second(cfg, options, log, report);
  report["config"] = cfg.echo();
  report["seed"] = cfg.seed;
  write_json(options.out_dir / "report.json", report);
  log << options.subcommand << ": report at "
      << (options.out_dir / "report.json").string() << "\n";
}

int run(const RunOptions& options, std::ostream& log, std::ostream& err) {
  try {
    run_subcommand(options, log);
    return kExitOk;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const numerical_error& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const embedding_error& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace speclab::cli
