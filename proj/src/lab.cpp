#include "speclab/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "speclab/errors.hpp"
#include "speclab/fft.hpp"
#include "speclab/parallel.hpp"
#include "speclab/periodogram.hpp"
#include "speclab/quadrature.hpp"
#include "speclab/rng.hpp"

namespace speclab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_condition_inputs(const DecayRate& decay, double beta,
                               double gamma) {
  if (!decay.is_exponential &&
      !(decay.alpha > 0.0 && decay.alpha <= 1.0)) {
    throw std::invalid_argument(
        "condition check: power decay exponent alpha must lie in (0, 1]");
  }
  if (!(beta > 0.0)) {
    throw std::invalid_argument(
        "condition check: trend exponent beta must be positive");
  }
  if (!(gamma > 0.0)) {
    throw std::invalid_argument(
        "condition check: kernel exponent gamma must be positive");
  }
}

/// Collects per-replication values written into fixed slots, then compacts
/// them in replication order so the report does not depend on worker
/// scheduling.
struct RepSlots {
  explicit RepSlots(std::size_t reps)
      : values(reps, 0.0), ok(reps, static_cast<unsigned char>(0)) {}

  std::vector<double> values;
  std::vector<unsigned char> ok;

  std::vector<double> compact() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (ok[i]) out.push_back(values[i]);
    }
    return out;
  }
};

McReport base_report(std::size_t reps, std::uint64_t base_seed) {
  McReport report;
  report.requested = reps;
  report.base_seed = base_seed;
  return report;
}

void finalize_report(McReport& report, const RepSlots& slots) {
  report.samples = slots.compact();
  report.completed = report.samples.size();
  report.failed = report.requested - report.completed;
  if (report.completed < 2) {
    throw numerical_error(
        "monte carlo: fewer than 2 replications completed; statistics "
        "undefined",
        static_cast<double>(report.completed));
  }
  report.summary = summarize(report.samples);
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kTheoremApplies: return "THEOREM_APPLIES";
    case Verdict::kNotCovered: return "NOT_COVERED";
  }
  return "UNKNOWN";
}

ConditionReport check_conditions(const DecayRate& decay, double beta,
                                 double gamma, MemoryClass memory) {
  validate_condition_inputs(decay, beta, gamma);

  ConditionReport report;
  report.covariance_decay = decay;
  report.beta = beta;
  report.gamma = gamma;
  report.memory = memory;
  report.exponential_as_alpha_one = decay.is_exponential;

  // Exponential covariance decay dominates every power bound; alpha = 1 is
  // the strongest exponent the power-form inequalities accept.
  const double alpha = decay.is_exponential ? 1.0 : decay.alpha;

  report.base = (2.0 * beta + gamma > 1.5) && (beta > 0.25);
  report.case_i = beta + gamma > 1.0;
  const bool lm_extra =
      !(beta < 1.0 && 1.0 < gamma) || (alpha + 2.0 * beta > 1.0);
  report.case_ii = (alpha + gamma >= 1.5) && lm_extra;

  const bool case_for_memory =
      memory == MemoryClass::kLong ? report.case_ii : report.case_i;
  report.verdict = (report.base && case_for_memory)
                       ? Verdict::kTheoremApplies
                       : Verdict::kNotCovered;
  return report;
}

ConditionReport check_conditions(const SpectralModel& model,
                                 const TrendSpec& trend,
                                 const SmoothingKernel& kernel) {
  const double beta = trend.form == TrendForm::kZero ? kInf : trend.beta;
  return check_conditions(model.alpha_decay(), beta, kernel.decay_exponent(),
                          model.memory());
}

double trend_trend_term(const TrendSpec& trend, const SmoothingKernel& kernel,
                        double horizon, std::size_t steps) {
  if (!(horizon >= 1.0)) {
    throw std::invalid_argument("trend term: horizon must be >= 1");
  }
  if (steps < 2) {
    throw std::invalid_argument("trend term: need at least 2 steps");
  }
  if (trend.form == TrendForm::kZero) return 0.0;

  const double h = horizon / static_cast<double>(steps);
  std::vector<double> weighted(steps + 1);
  std::vector<double> a_values(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double wt = (k == 0 || k == steps) ? 0.5 : 1.0;
    weighted[k] = wt * trend.eval(static_cast<double>(k) * h);
    a_values[k] = kernel.fourier_transform(static_cast<double>(k) * h);
  }
  const double form = toeplitz_quadratic_form(weighted, a_values);
  return form * h * h / std::sqrt(horizon);
}

double nu_function(const TrendSpec& trend, const SmoothingKernel& kernel,
                   double horizon, double s) {
  if (!(horizon > 0.0)) {
    throw std::invalid_argument("nu: horizon must be positive");
  }
  if (!(s >= 0.0 && s <= horizon)) {
    throw std::invalid_argument("nu: s must lie in [0, T]");
  }
  if (trend.form == TrendForm::kZero) return 0.0;

  double lo = 0.0;
  double hi = horizon;
  const double support = kernel.support_radius();
  if (std::isfinite(support)) {
    lo = std::max(lo, s - support);
    hi = std::min(hi, s + support);
    if (lo >= hi) return 0.0;
  }

  const auto integrand = [&](double t) {
    return trend.eval(t) * kernel.fourier_transform(t - s);
  };
  constexpr double kAbsTol = 1e-13;
  constexpr double kRelTol = 1e-9;
  // a(t - s) has a kink at t = s; splitting there keeps QAGS happy.
  if (lo < s && s < hi) {
    return integrate(integrand, lo, s, kAbsTol, kRelTol) +
           integrate(integrand, s, hi, kAbsTol, kRelTol);
  }
  return integrate(integrand, lo, hi, kAbsTol, kRelTol);
}

VarianceBound variance_bound_term(const TrendSpec& trend,
                                  const SmoothingKernel& kernel,
                                  const SpectralModel& model, double horizon,
                                  std::size_t steps) {
  if (!(horizon >= 1.0)) {
    throw std::invalid_argument("variance bound: horizon must be >= 1");
  }
  if (steps < 2) {
    throw std::invalid_argument("variance bound: need at least 2 steps");
  }
  if (trend.form == TrendForm::kZero) return {0.0, 0.0};

  const double h = horizon / static_cast<double>(steps);
  std::vector<double> nu_abs(steps + 1);
  std::vector<double> cov_abs(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double wt = (k == 0 || k == steps) ? 0.5 : 1.0;
    const double sk = static_cast<double>(k) * h;
    nu_abs[k] = wt * std::abs(nu_function(trend, kernel, horizon, sk));
    cov_abs[k] = std::abs(model.covariance(sk));
  }
  const double j_value = toeplitz_quadratic_form(nu_abs, cov_abs) * h * h;
  return {j_value, j_value / horizon};
}

McReport mc_difference_functional(const SpectralModel& model,
                                  const TrendSpec& trend,
                                  const SmoothingKernel& kernel,
                                  const SamplingGrid& grid, std::size_t reps,
                                  std::uint64_t base_seed,
                                  std::size_t workers) {
  if (reps < 50) {
    throw std::invalid_argument(
        "difference functional: at least 50 replications required");
  }

  const PathSampler sampler(model, grid);
  const std::vector<double> g_table = tabulate_kernel(grid, kernel);
  const double sqrt_t = std::sqrt(grid.horizon);

  RepSlots slots(reps);
  parallel_for(reps, workers, [&](std::size_t i) {
    try {
      const SampledPath clean = sampler.sample(derive_seed(base_seed, i));
      const SampledPath dirty = contaminate(clean, trend);
      const double j_clean =
          smoothed_functional(compute_periodogram(clean), g_table);
      const double j_dirty =
          smoothed_functional(compute_periodogram(dirty), g_table);
      const double s = sqrt_t * (j_dirty - j_clean);
      if (!std::isfinite(s)) return;  // counted as failed
      slots.values[i] = s;
      slots.ok[i] = 1;
    } catch (const numerical_error&) {
      // replication aborted; reported through the failure count
    }
  });

  McReport report = base_report(reps, base_seed);
  finalize_report(report, slots);
  report.extra["mean_abs_s"] = report.summary.mean_abs;
  report.extra["trend_term_deterministic"] =
      trend_trend_term(trend, kernel, grid.horizon);
  return report;
}

McReport mc_clt(const SpectralModel& model, const SmoothingKernel& kernel,
                const SamplingGrid& grid, std::size_t reps,
                std::uint64_t base_seed, std::size_t workers) {
  if (reps < 200) {
    throw std::invalid_argument("clt: at least 200 replications required");
  }

  const double sigma2 = asymptotic_variance(model, kernel);
  const auto fg = [&](double lambda) {
    return model.density(lambda) * kernel.density(lambda);
  };
  const double target = 2.0 * integrate_to_inf(fg, 0.0, 1e-12, 1e-9);

  const PathSampler sampler(model, grid);
  const std::vector<double> g_table = tabulate_kernel(grid, kernel);
  const double sqrt_t = std::sqrt(grid.horizon);

  RepSlots slots(reps);
  parallel_for(reps, workers, [&](std::size_t i) {
    try {
      const SampledPath path = sampler.sample(derive_seed(base_seed, i));
      const double j = smoothed_functional(compute_periodogram(path), g_table);
      const double s = sqrt_t * (j - target);
      if (!std::isfinite(s)) return;
      slots.values[i] = s;
      slots.ok[i] = 1;
    } catch (const numerical_error&) {
    }
  });

  McReport report = base_report(reps, base_seed);
  finalize_report(report, slots);
  report.ks = ks_test_normal(report.samples, 0.0, std::sqrt(sigma2));
  const double sample_var = report.summary.sd * report.summary.sd;
  report.extra["sigma2"] = sigma2;
  report.extra["target_integral"] = target;
  report.extra["sample_variance"] = sample_var;
  report.extra["variance_ratio"] = sample_var / sigma2;
  return report;
}

McReport mc_estimator_robustness(const ModelFamily& family,
                                 const std::vector<double>& theta_star,
                                 const TrendSpec& trend,
                                 const WhittleConfig& cfg,
                                 const SamplingGrid& grid, std::size_t reps,
                                 std::uint64_t base_seed, std::size_t workers,
                                 std::size_t component) {
  if (reps < 50) {
    throw std::invalid_argument(
        "estimator robustness: at least 50 replications required");
  }
  if (component >= family.dimension()) {
    throw std::invalid_argument(
        "estimator robustness: component index out of range");
  }
  const SpectralModel model = family.instantiate(theta_star);
  if (cfg.lower.size() != family.dimension() ||
      cfg.upper.size() != family.dimension()) {
    throw std::invalid_argument(
        "estimator robustness: bound dimension mismatch");
  }

  // Start every fit from the box midpoint: no knowledge of the truth leaks
  // into the optimizer.
  std::vector<double> init(family.dimension());
  for (std::size_t i = 0; i < init.size(); ++i) {
    init[i] = 0.5 * (cfg.lower[i] + cfg.upper[i]);
  }

  const PathSampler sampler(model, grid);

  RepSlots diff(reps);
  std::vector<double> fit_clean(reps, 0.0);
  std::vector<double> fit_dirty(reps, 0.0);
  std::vector<unsigned char> boundary(reps, 0);
  parallel_for(reps, workers, [&](std::size_t i) {
    try {
      const SampledPath clean = sampler.sample(derive_seed(base_seed, i));
      const SampledPath dirty = contaminate(clean, trend);
      const EstimateResult clean_fit =
          estimate(compute_periodogram(clean), family, cfg, init);
      const EstimateResult dirty_fit =
          estimate(compute_periodogram(dirty), family, cfg, init);
      if (!clean_fit.converged || !dirty_fit.converged) return;
      const double a = clean_fit.theta_hat[component];
      const double b = dirty_fit.theta_hat[component];
      if (!std::isfinite(a) || !std::isfinite(b)) return;
      fit_clean[i] = a;
      fit_dirty[i] = b;
      boundary[i] =
          (clean_fit.boundary_hit || dirty_fit.boundary_hit) ? 1 : 0;
      diff.values[i] = std::abs(b - a);
      diff.ok[i] = 1;
    } catch (const numerical_error&) {
    }
  });

  McReport report = base_report(reps, base_seed);
  finalize_report(report, diff);

  std::vector<double> clean_kept, dirty_kept, err_clean, err_dirty;
  std::size_t boundary_hits = 0;
  for (std::size_t i = 0; i < reps; ++i) {
    if (!diff.ok[i]) continue;
    clean_kept.push_back(fit_clean[i]);
    dirty_kept.push_back(fit_dirty[i]);
    err_clean.push_back(std::abs(fit_clean[i] - theta_star[component]));
    err_dirty.push_back(std::abs(fit_dirty[i] - theta_star[component]));
    boundary_hits += boundary[i];
  }
  report.series["theta_clean"] = std::move(clean_kept);
  report.series["theta_contaminated"] = std::move(dirty_kept);
  report.extra["median_abs_diff"] = median(report.samples);
  report.extra["median_abs_err_clean"] = median(err_clean);
  report.extra["median_abs_err_contaminated"] = median(err_dirty);
  report.extra["boundary_hits"] = static_cast<double>(boundary_hits);
  report.series["abs_err_clean"] = std::move(err_clean);
  report.series["abs_err_contaminated"] = std::move(err_dirty);
  return report;
}

}  // namespace speclab
