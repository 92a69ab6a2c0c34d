// Acceptance harness: one self-contained check per shipped guarantee,
// printing a single [PASS]/[FAIL] line each. Invoke with no arguments to run
// all criteria, or with a list of 1-based criterion numbers.
//
// Tolerances and runtime budgets are pinned here, next to each check.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "speclab/cli/runner.hpp"
#include "speclab/lab.hpp"
#include "speclab/periodogram.hpp"
#include "speclab/quadrature.hpp"
#include "speclab/rng.hpp"
#include "speclab/sampling.hpp"
#include "speclab/stats.hpp"
#include "speclab/whittle.hpp"

using namespace speclab;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

// ---------------------------------------------------------------- criterion 1
// OU covariance recovered by numerical quadrature of the spectral density
// matches sigma^2 e^{-theta |t|} to 1e-6 on t in [0, 20].
Outcome c01_fourier_pair() {
  const double theta = 1.0, sigma2 = 1.0;
  const auto f = [&](double lam) {
    return sigma2 * theta / (kPi * (theta * theta + lam * lam));
  };
  constexpr double kTol = 1e-6;
  const double split = 50.0;

  double worst = 0.0;
  for (double t = 0.0; t <= 20.0; t += 0.5) {
    double r;
    if (t == 0.0) {
      r = 2.0 * (integrate(f, 0.0, split, 1e-12) +
                 integrate_to_inf(f, split, 1e-12));
    } else {
      const double head = integrate(
          [&](double lam) { return std::cos(lam * t) * f(lam); }, 0.0, split,
          1e-12);
      r = 2.0 * (head + fourier_cos_tail(f, split, t, 1e-12));
    }
    worst = std::max(worst, std::abs(r - sigma2 * std::exp(-theta * t)));
  }
  return {worst < kTol,
          fmt("max |r_quadrature - sigma^2 e^{-theta t}| = %.3g on t in "
              "[0,20] (tol %.0e)",
              worst, kTol)};
}

// ---------------------------------------------------------------- criterion 2
// Long-memory covariance approaches its closed-form power-law asymptote:
// ratio within [0.95, 1.05] at t = 500 for u=0.25, v=1, c=1.
Outcome c02_frbm_asymptote() {
  const auto fr = SpectralModel::frbm(0.25, 1.0, 1.0);
  const double ratio =
      fr.covariance(500.0) / frbm_covariance_asymptote(fr, 500.0);
  return {ratio > 0.95 && ratio < 1.05,
          fmt("covariance(500)/asymptote(500) = %.6f (need [0.95, 1.05])",
              ratio)};
}

// ---------------------------------------------------------------- criterion 3
// Parseval: the periodogram integrates to the time-domain mean square within
// 1% on 100 simulated paths at n = 4096.
Outcome c03_parseval() {
  const SamplingGrid grid(100.0, 4096);
  const PathSampler sampler(SpectralModel::ou(1.0, 1.0), grid);
  constexpr double kTol = 0.01;

  double worst = 0.0;
  for (std::uint64_t r = 0; r < 100; ++r) {
    const auto path = sampler.sample(derive_seed(31, r));
    const auto pg = compute_periodogram(path);
    const double freq = smoothed_functional(pg, [](double) { return 1.0; });
    double ms = 0.0;
    for (double y : path.values) ms += y * y;
    ms /= static_cast<double>(grid.n);
    worst = std::max(worst, std::abs(freq - ms) / ms);
  }
  return {worst < kTol,
          fmt("max Parseval gap over 100 paths = %.4f (tol %.2f)", worst,
              kTol)};
}

// ---------------------------------------------------------------- criterion 4
// Frequency/time duality: trapezoid functional of the periodogram and the
// Toeplitz quadratic form agree within 1% on every one of 100 paths (Poisson
// kernel). The gap has two parts: sub-resolution sampling noise of the
// FFT-grid trapezoid (~T^{-1/2} per path) and the deterministic
// beyond-Nyquist truncation (~dt^2), so the horizon must be long AND the
// grid fine; (T=1600, n=32768) keeps the worst path near 0.3%.
Outcome c04_duality() {
  const SamplingGrid grid(1600.0, 32768);
  const PathSampler sampler(SpectralModel::ou(1.0, 1.0), grid);
  const auto kernel = SmoothingKernel::poisson();
  const auto table = tabulate_kernel(grid, kernel);
  constexpr double kTol = 0.01;

  double worst = 0.0;
  for (std::uint64_t r = 0; r < 100; ++r) {
    const auto path = sampler.sample(derive_seed(47, r));
    const double freq = smoothed_functional(compute_periodogram(path), table);
    const double time = quadratic_form_functional(path, kernel);
    worst = std::max(worst,
                     std::abs(freq - time) / std::max(std::abs(time), 1e-9));
  }
  return {worst < kTol,
          fmt("max duality gap over 100 paths = %.4f (tol %.2f)", worst,
              kTol)};
}

// ---------------------------------------------------------------- criterion 5
// Condition checker: the sufficient regions are always covered, at least one
// point outside each is not, and the full 1000-point lattice matches an
// independent restatement of the inequalities for every memory class.
Outcome c05_conditions() {
  const auto restated = [](double alpha, double beta, double gamma,
                           MemoryClass memory) {
    if (!(2.0 * beta + gamma > 1.5 && beta > 0.25)) return false;
    if (memory == MemoryClass::kLong) {
      if (!(alpha + gamma >= 1.5)) return false;
      if (beta < 1.0 && gamma > 1.0 && !(alpha + 2.0 * beta > 1.0))
        return false;
      return true;
    }
    return beta + gamma > 1.0;
  };

  std::size_t mismatches = 0, checked = 0;
  std::size_t region_i_misses = 0, region_ii_misses = 0;
  std::size_t outside_i_not_covered = 0, outside_ii_not_covered = 0;

  for (int ia = 1; ia <= 10; ++ia) {
    for (int ib = 1; ib <= 10; ++ib) {
      for (int ig = 1; ig <= 10; ++ig) {
        const double alpha = 0.1 * ia, beta = 0.1 * ib, gamma = 0.1 * ig;
        ++checked;
        for (MemoryClass memory :
             {MemoryClass::kShort, MemoryClass::kIntermediate,
              MemoryClass::kLong}) {
          const bool applies =
              check_conditions(DecayRate::power(alpha), beta, gamma, memory)
                  .verdict == Verdict::kTheoremApplies;
          if (applies != restated(alpha, beta, gamma, memory)) ++mismatches;
        }

        const bool sm_applies =
            check_conditions(DecayRate::power(alpha), beta, gamma,
                             MemoryClass::kShort)
                .verdict == Verdict::kTheoremApplies;
        if (beta > 0.5 && gamma >= 0.5) {
          if (!sm_applies) ++region_i_misses;
        } else if (!sm_applies) {
          ++outside_i_not_covered;
        }

        const bool lm_applies =
            check_conditions(DecayRate::power(alpha), beta, gamma,
                             MemoryClass::kLong)
                .verdict == Verdict::kTheoremApplies;
        if (alpha >= 0.75 && beta > 0.375 && gamma >= 0.75) {
          if (!lm_applies) ++region_ii_misses;
        } else if (!lm_applies) {
          ++outside_ii_not_covered;
        }
      }
    }
  }

  const bool pass = mismatches == 0 && region_i_misses == 0 &&
                    region_ii_misses == 0 && outside_i_not_covered > 0 &&
                    outside_ii_not_covered > 0;
  return {pass,
          fmt("lattice %zu points x 3 classes: %zu mismatches; region misses "
              "(i) %zu, (ii) %zu; NOT_COVERED outside regions (i) %zu, (ii) "
              "%zu",
              checked, mismatches, region_i_misses, region_ii_misses,
              outside_i_not_covered, outside_ii_not_covered)};
}

// ---------------------------------------------------------------- criterion 6
// Deterministic trend-trend term D(T) for trend C=1, beta=0.5 with the
// Poisson kernel: strictly decreasing on {50,100,200,400} and halved by the
// end of the ladder.
Outcome c06_trend_term_decay() {
  const auto trend = TrendSpec::shifted_power(1.0, 0.5);
  const auto kernel = SmoothingKernel::poisson();
  const std::vector<double> ladder{50.0, 100.0, 200.0, 400.0};

  std::vector<double> d;
  bool decreasing = true;
  for (double horizon : ladder) {
    d.push_back(trend_trend_term(trend, kernel, horizon));
    if (d.size() > 1 && !(d.back() < d[d.size() - 2])) decreasing = false;
  }
  const double ratio = d.back() / d.front();
  const bool halved = ratio < 0.5;
  return {decreasing && halved,
          fmt("D: %.5f > %.5f > %.5f > %.5f (%s); D(400)/D(50) = %.4f (need "
              "< 0.5)",
              d[0], d[1], d[2], d[3],
              decreasing ? "strictly decreasing" : "NOT decreasing", ratio)};
}

// ---------------------------------------------------------------- criterion 7
// Deterministic variance-bound term J(T)/T strictly decreasing on the ladder,
// with < 1% grid-refinement self-error at T = 200.
Outcome c07_variance_bound_decay() {
  const auto ou = SpectralModel::ou(1.0, 1.0);
  const auto trend = TrendSpec::shifted_power(1.0, 0.5);
  const auto kernel = SmoothingKernel::poisson();

  std::vector<double> jt;
  bool decreasing = true;
  for (double horizon : {50.0, 100.0, 200.0, 400.0}) {
    jt.push_back(variance_bound_term(trend, kernel, ou, horizon).j_over_t);
    if (jt.size() > 1 && !(jt.back() < jt[jt.size() - 2])) decreasing = false;
  }

  const double coarse = variance_bound_term(trend, kernel, ou, 200.0, 512).j_value;
  const double fine = variance_bound_term(trend, kernel, ou, 200.0, 1024).j_value;
  const double self_err = std::abs(fine - coarse) / fine;

  return {decreasing && self_err < 0.01,
          fmt("J/T: %.5f > %.5f > %.5f > %.5f (%s); refinement self-error "
              "%.4f (tol 0.01)",
              jt[0], jt[1], jt[2], jt[3],
              decreasing ? "strictly decreasing" : "NOT decreasing",
              self_err)};
}

// ---------------------------------------------------------------- criterion 8
// Paired-seed difference functional S = sqrt(T)[J(I_X) - J(I_Y)]: mean |S|
// shrinks from T=100 to T=400 over 200 replications, and a ZERO trend gives
// S identically 0.
Outcome c08_difference_functional() {
  const auto ou = SpectralModel::ou(1.0, 1.0);
  const auto trend = TrendSpec::shifted_power(1.0, 0.5);
  const auto kernel = SmoothingKernel::poisson();
  const std::size_t reps = 200, workers = 4;

  const auto at100 = mc_difference_functional(
      ou, trend, kernel, SamplingGrid(100.0, 2048), reps, 71, workers);
  const auto at400 = mc_difference_functional(
      ou, trend, kernel, SamplingGrid(400.0, 2048), reps, 71, workers);

  const auto zero = mc_difference_functional(
      ou, TrendSpec::zero(), kernel, SamplingGrid(100.0, 2048), reps, 71,
      workers);
  bool exact_zero = zero.completed == reps;
  for (double s : zero.samples) exact_zero = exact_zero && s == 0.0;

  const bool pass =
      at400.summary.mean_abs < at100.summary.mean_abs && exact_zero;
  return {pass,
          fmt("mean|S|: T=100 %.5f -> T=400 %.5f (need decrease); zero-trend "
              "samples all exactly 0: %s",
              at100.summary.mean_abs, at400.summary.mean_abs,
              exact_zero ? "yes" : "NO")};
}

// ---------------------------------------------------------------- criterion 9
// Distributional limit of the normalized smoothed functional: KS against
// N(0, sigma^2) at p > 0.01 and sample variance within 30% of sigma^2
// (OU + Poisson, T = 200, 500 replications). Base seed is the project-wide
// default (1); the exact finite-T skewness of the functional is 0.40 at
// T = 200, which costs ~0.027 of KS headroom but leaves the test passing
// for 30/30 consecutive seeds.
Outcome c09_clt() {
  const auto report =
      mc_clt(SpectralModel::ou(1.0, 1.0), SmoothingKernel::poisson(),
             SamplingGrid(200.0, 2048), 500, 1, 4);
  const double p = report.ks ? report.ks->p_value : 0.0;
  const double ratio = report.extra.at("variance_ratio");
  const bool pass = p > 0.01 && ratio > 0.7 && ratio < 1.3;
  return {pass,
          fmt("KS p = %.4f (need > 0.01); sample variance / sigma^2 = %.4f "
              "(need [0.7, 1.3]); sigma^2 = %.6f",
              p, ratio, report.extra.at("sigma2"))};
}

// --------------------------------------------------------------- criterion 10
// Estimator robustness: contamination shifts the fit by less than the
// sampling error, which itself is below 0.15 (OU rate, T=400, 100 paired
// replications); and a noise-free periodogram is recovered to 1e-3.
Outcome c10_estimator() {
  WhittleConfig cfg;
  cfg.weight = WeightSpec::rational();
  cfg.lower = {0.05, 0.05};
  cfg.upper = {10.0, 10.0};

  const auto report = mc_estimator_robustness(
      ModelFamily::ou(), {1.0, 1.0}, TrendSpec::shifted_power(1.0, 0.5), cfg,
      SamplingGrid(400.0, 2048), 100, 83, 4, 0);
  const double diff = report.extra.at("median_abs_diff");
  const double err = report.extra.at("median_abs_err_clean");

  // noise-free recovery: ordinates prescribed to the true density
  const SamplingGrid grid(400.0, 2048);
  SampledPath flat{grid, std::vector<double>(grid.n, 0.0), PathLabel::kClean,
                   0};
  Periodogram pg = compute_periodogram(flat);
  const auto truth = SpectralModel::ou(1.0, 1.0);
  for (std::size_t j = 0; j < pg.frequencies.size(); ++j) {
    pg.ordinates[j] = truth.density(pg.frequencies[j]);
  }
  const auto fit = estimate(pg, ModelFamily::ou(), cfg, {3.0, 3.0});
  const double recovery = std::max(std::abs(fit.theta_hat[0] - 1.0),
                                   std::abs(fit.theta_hat[1] - 1.0));

  const bool pass = diff < err && err < 0.15 && fit.converged &&
                    recovery < 1e-3;
  return {pass,
          fmt("median|theta_X - theta_Y| = %.5f < median|theta_Y - 1| = %.5f "
              "< 0.15; noise-free recovery error %.2g (tol 1e-3)",
              diff, err, recovery)};
}

// --------------------------------------------------------------- criterion 11
// Determinism: the same config and seed produce byte-identical reports.
Outcome c11_determinism() {
  namespace fs = std::filesystem;
  const fs::path root =
      fs::temp_directory_path() /
      ("speclab_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  fs::create_directories(root);

  const fs::path config = root / "config.json";
  {
    std::ofstream out(config);
    out << R"({
  "model": {"family": "ou", "rate": 1.0, "sigma2": 1.0},
  "trend": {"form": "shifted_power", "c": 1.0, "beta": 0.5},
  "kernel": {"form": "poisson"},
  "grid": {"horizons": [50.0, 100.0], "n": 512},
  "whittle": {"family": "ou", "lower": [0.05, 0.05], "upper": [10.0, 10.0],
              "theta_star": [1.0, 1.0]},
  "replications": 50,
  "seed": 424242,
  "workers": 4
}
)";
  }

  const auto read_all = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  std::ostringstream log;
  cli::run_subcommand({"robustness", config, root / "a", {}, {}}, log);
  cli::run_subcommand({"robustness", config, root / "b", {}, {}}, log);

  const bool report_same =
      read_all(root / "a" / "report.json") == read_all(root / "b" / "report.json");
  const bool table_same =
      read_all(root / "a" / "ladder.csv") == read_all(root / "b" / "ladder.csv");
  const bool nonempty = fs::file_size(root / "a" / "report.json") > 0;

  fs::remove_all(root);
  return {report_same && table_same && nonempty,
          fmt("report.json byte-identical: %s; ladder.csv byte-identical: %s",
              report_same ? "yes" : "NO", table_same ? "yes" : "NO")};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double budget_seconds;  // 0: no stated budget
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"fourier pair oracle", c01_fourier_pair, 5.0},
      {"long-memory asymptote", c02_frbm_asymptote, 60.0},
      {"periodogram Parseval", c03_parseval, 0.0},
      {"frequency/time duality", c04_duality, 0.0},
      {"condition checker lattice", c05_conditions, 0.0},
      {"trend-term decay", c06_trend_term_decay, 120.0},
      {"variance-bound decay", c07_variance_bound_decay, 0.0},
      {"paired difference functional", c08_difference_functional, 600.0},
      {"distributional limit", c09_clt, 0.0},
      {"estimator robustness", c10_estimator, 0.0},
      {"byte-identical reports", c11_determinism, 0.0},
  };

  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: %s [criterion 1..%zu]...\n", argv[0],
                   criteria.size());
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(k));
  }
  if (selected.empty()) {
    for (std::size_t k = 1; k <= criteria.size(); ++k) selected.push_back(k);
  }

  bool all_pass = true;
  for (std::size_t k : selected) {
    const Criterion& c = criteria[k - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& err) {
      out = {false, std::string("exception: ") + err.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = c.budget_seconds == 0.0 || elapsed < c.budget_seconds;
    const bool pass = out.pass && in_budget;
    all_pass = all_pass && pass;
    std::printf("[%s] criterion %02zu (%s): %s [%.2f s%s]\n",
                pass ? "PASS" : "FAIL", k, c.name, out.detail.c_str(), elapsed,
                in_budget ? ""
                          : fmt(", over budget %.0f s", c.budget_seconds)
                                .c_str());
  }
  return all_pass ? 0 : 1;
}
