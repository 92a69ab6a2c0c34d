#ifndef SPECLAB_WHITTLE_HPP
#define SPECLAB_WHITTLE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "speclab/kernels.hpp"
#include "speclab/nelder_mead.hpp"
#include "speclab/periodogram.hpp"
#include "speclab/spectral_model.hpp"

namespace speclab {

enum class WeightForm { kRational, kConstantOnBand };

std::string to_string(WeightForm form);

/// Even, nonnegative, integrable weight w(lambda) in the Whittle objective.
struct WeightSpec {
  WeightForm form = WeightForm::kRational;
  double band = 1.0;  // half-width, CONSTANT_ON_BAND only

  static WeightSpec rational();
  static WeightSpec constant_on_band(double half_width);

  double operator()(double lambda) const;
};

/// Parameterized model family: maps a parameter vector theta onto a
/// SpectralModel. When a component multiplies the density linearly (OU
/// sigma^2, FRBM c) its index is exposed so estimation can profile it out.
class ModelFamily {
 public:
  static ModelFamily ou();                    // theta = (rate, sigma2)
  static ModelFamily frbm_fixed_v(double v);  // theta = (u, c)
  static ModelFamily frbm();                  // theta = (u, v, c)

  std::size_t dimension() const { return names_.size(); }
  const std::vector<std::string>& parameter_names() const { return names_; }
  std::optional<std::size_t> scale_index() const { return scale_index_; }
  Family family() const { return family_; }
  std::optional<double> fixed_v() const { return fixed_v_; }

  SpectralModel instantiate(std::span<const double> theta) const;
  /// True when the instantiated density has a pole at the origin, in which
  /// case quadratures must skip the zero-frequency bin.
  bool origin_pole() const { return family_ == Family::kFrbm; }

 private:
  ModelFamily(Family family, std::vector<std::string> names,
              std::optional<std::size_t> scale_index,
              std::optional<double> fixed_v)
      : family_(family),
        names_(std::move(names)),
        scale_index_(scale_index),
        fixed_v_(fixed_v) {}

  Family family_;
  std::vector<std::string> names_;
  std::optional<std::size_t> scale_index_;
  std::optional<double> fixed_v_;
};

struct WhittleConfig {
  WeightSpec weight;
  std::vector<double> lower;
  std::vector<double> upper;
  NelderMeadOptions optimizer;
  bool profile_scale = true;  // solve the scale component in closed form
};

struct EstimateResult {
  std::vector<double> theta_hat;
  double objective = 0.0;
  bool converged = false;
  bool boundary_hit = false;
  std::size_t evaluations = 0;
};

/// Weighted Whittle objective
///   (1/4pi) * \int [log f(lambda,theta) + I_T(lambda)/f(lambda,theta)]
///            w(lambda) dlambda
/// by trapezoid quadrature on the periodogram grid. Families with an origin
/// pole skip the zero-frequency bin.
double whittle_objective(const Periodogram& pg, const ModelFamily& family,
                         std::span<const double> theta,
                         const WhittleConfig& cfg);

/// Component-wise quadrature of \int [I_T - f(.,theta)] g_i dlambda with
/// g_i = w * d(1/f)/dtheta_i taken by central finite differences. Zero at
/// the fitted parameters up to optimizer and quadrature error.
std::vector<double> estimating_equation_residual(const Periodogram& pg,
                                                 const ModelFamily& family,
                                                 std::span<const double> theta,
                                                 const WhittleConfig& cfg);

/// Nelder-Mead minimization of the Whittle objective over the configured
/// box. When cfg.profile_scale is set and the family exposes a scale index,
/// the scale solves in closed form per shape evaluation and the simplex
/// walks the remaining components only. Deterministic given inputs.
EstimateResult estimate(const Periodogram& pg, const ModelFamily& family,
                        const WhittleConfig& cfg,
                        std::vector<double> theta_init);

/// Limiting variance of sqrt(T) * [smoothed functional - its mean] under the
/// project Fourier conventions (r = \int e^{i lambda t} f, a = (1/2pi) \int
/// e^{i lambda t} g): sigma^2 = 4 pi \int f^2 g^2 dlambda. The integral is
/// extended geometrically until the tail contributes < 1e-6 relative.
double asymptotic_variance(const SpectralModel& model,
                           const SmoothingKernel& kernel);

}  // namespace speclab

#endif  // SPECLAB_WHITTLE_HPP
