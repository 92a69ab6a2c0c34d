#ifndef SPECLAB_LAB_HPP
#define SPECLAB_LAB_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "speclab/kernels.hpp"
#include "speclab/sampling.hpp"
#include "speclab/spectral_model.hpp"
#include "speclab/stats.hpp"
#include "speclab/trend.hpp"
#include "speclab/whittle.hpp"

namespace speclab {

enum class Verdict { kTheoremApplies, kNotCovered };

std::string to_string(Verdict v);

/// Decision record for the robustness theorem's hypotheses. Inequalities:
///   base:    2 beta + gamma > 3/2  and  beta > 1/4       (strict)
///   case i:  beta + gamma > 1                            (strict, SM/IM)
///   case ii: alpha + gamma >= 3/2  and
///            (beta < 1 < gamma  implies  alpha + 2 beta > 1)   (LM)
/// gamma = +inf encodes compactly supported or exponentially decaying a(t)
/// and satisfies every lower bound.
struct ConditionReport {
  DecayRate covariance_decay;  // alpha, or the exponential marker
  double beta = 0.0;
  double gamma = 0.0;
  MemoryClass memory = MemoryClass::kShort;
  bool exponential_as_alpha_one = false;  // alpha := 1 substituted

  bool base = false;
  bool case_i = false;
  bool case_ii = false;
  Verdict verdict = Verdict::kNotCovered;
};

ConditionReport check_conditions(const DecayRate& decay, double beta,
                                 double gamma, MemoryClass memory);

/// Derives (alpha, beta, gamma, memory) from concrete ingredients. A ZERO
/// trend enters as beta = +inf (the bound holds for every exponent).
ConditionReport check_conditions(const SpectralModel& model,
                                 const TrendSpec& trend,
                                 const SmoothingKernel& kernel);

/// D(T) = T^{-1/2} \int_0^T \int_0^T M(t) M(s) a(t-s) dt ds,
/// trapezoid on `steps`+1 nodes per axis with the double sum collapsed to
/// an FFT Toeplitz form in the difference variable.
double trend_trend_term(const TrendSpec& trend, const SmoothingKernel& kernel,
                        double horizon, std::size_t steps = 2048);

/// nu(T, s) = \int_0^T M(t) a(t-s) dt by adaptive quadrature, split at the
/// kink t = s and restricted to the kernel's support. Accepts 0 <= s <= T.
double nu_function(const TrendSpec& trend, const SmoothingKernel& kernel,
                   double horizon, double s);

struct VarianceBound {
  double j_value = 0.0;   // J(T) = \int\int |nu(s) nu(tau) r(s-tau)| ds dtau
  double j_over_t = 0.0;  // the quantity that must vanish as T grows
};

VarianceBound variance_bound_term(const TrendSpec& trend,
                                  const SmoothingKernel& kernel,
                                  const SpectralModel& model, double horizon,
                                  std::size_t steps = 512);

/// Monte Carlo report for one (experiment, T) cell. `samples` holds the
/// primary per-replication statistic in replication order (failed
/// replications omitted), so reports are identical for any worker count.
struct McReport {
  std::size_t requested = 0;
  std::size_t completed = 0;
  std::size_t failed = 0;
  std::uint64_t base_seed = 0;
  Summary summary;  // of `samples`
  std::optional<KsResult> ks;
  std::map<std::string, double> extra;                 // named scalars
  std::map<std::string, std::vector<double>> series;   // per-rep columns
  std::vector<double> samples;
};

/// Paired-seed difference functional: per replication simulate Y, set
/// X = Y + M on the same grid, and record
///   S = sqrt(T) [ \int g I_{T,X} - \int g I_{T,Y} ].
/// With a ZERO trend S is exactly 0 in every replication.
McReport mc_difference_functional(const SpectralModel& model,
                                  const TrendSpec& trend,
                                  const SmoothingKernel& kernel,
                                  const SamplingGrid& grid, std::size_t reps,
                                  std::uint64_t base_seed,
                                  std::size_t workers = 1);

/// CLT check: distribution of sqrt(T) [ \int g I_{T,Y} - \int g f ] against
/// N(0, sigma^2) with sigma^2 from asymptotic_variance. KS statistic and
/// p-value filled in.
McReport mc_clt(const SpectralModel& model, const SmoothingKernel& kernel,
                const SamplingGrid& grid, std::size_t reps,
                std::uint64_t base_seed, std::size_t workers = 1);

/// Paired clean/contaminated Whittle fits from the same seed. The primary
/// statistic is |theta_X[c] - theta_Y[c]| for the designated component;
/// absolute errors of both fits against theta_star are reported alongside.
/// Replications where either fit fails to converge are excluded and counted.
McReport mc_estimator_robustness(const ModelFamily& family,
                                 const std::vector<double>& theta_star,
                                 const TrendSpec& trend,
                                 const WhittleConfig& cfg,
                                 const SamplingGrid& grid, std::size_t reps,
                                 std::uint64_t base_seed,
                                 std::size_t workers = 1,
                                 std::size_t component = 0);

}  // namespace speclab

#endif  // SPECLAB_LAB_HPP
