#ifndef SPECLAB_SPECTRAL_MODEL_HPP
#define SPECLAB_SPECTRAL_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

namespace speclab {

enum class Family { kOu, kFrbm, kScaled };

// SM / IM / LM classification by integrability of the covariance function.
enum class MemoryClass { kShort, kIntermediate, kLong };

std::string to_string(Family f);
std::string to_string(MemoryClass m);

// Covariance decay at infinity: |r(t)| <= C |t|^{-alpha}, or exponential
// (faster than any power).
struct DecayRate {
  static DecayRate power(double alpha);
  static DecayRate exponential();

  bool is_exponential = false;
  double alpha = 0.0;  // meaningful only when !is_exponential
};

/// Parametric spectral density family.
///
/// OU:   f(lambda) = sigma2 * rate / (pi (rate^2 + lambda^2)),
///       r(t) = sigma2 * exp(-rate |t|). Short memory workhorse with an
///       exact covariance oracle.
/// FRBM: f(lambda) = c |lambda|^{-2u} (1 + lambda^2)^{-v} with
///       0 < u < 1/2, v > 0, u + v > 1/2. Long memory; covariance by
///       adaptive quadrature with singularity splitting at the origin.
/// Scaled: any family multiplied by a positive constant.
class SpectralModel {
 public:
  static SpectralModel ou(double rate, double sigma2);
  static SpectralModel frbm(double u, double v, double c);
  static SpectralModel scaled(const SpectralModel& base, double factor);

  Family family() const { return family_; }
  Family base_family() const { return base_family_; }
  const std::vector<double>& theta() const { return theta_; }
  double scale() const { return scale_; }

  /// f(lambda). Even in lambda; throws std::domain_error for FRBM at
  /// lambda = 0 (origin singularity).
  double density(double lambda) const;

  /// r(t) = \int e^{i lambda t} f(lambda) dlambda (no 2pi prefactor).
  /// Closed form for OU; adaptive quadrature for FRBM (relative
  /// tolerance 1e-6, numerical_error on failure).
  double covariance(double t) const;

  MemoryClass memory() const;
  DecayRate alpha_decay() const;

 private:
  SpectralModel() = default;

  Family family_ = Family::kOu;
  Family base_family_ = Family::kOu;
  std::vector<double> theta_;
  double scale_ = 1.0;
};

/// Leading large-t term of the FRBM covariance,
///   2 c sin(pi * arg) Gamma(1 - 2u) t^{2u-1},
/// with arg defaulting to u. The factor 2 comes from the evenness of f;
/// the quadrature oracle pins it down (see tests). Requires v > 1/2, t > 0.
double frbm_covariance_asymptote(const SpectralModel& model, double t,
                                 std::optional<double> sine_arg = std::nullopt);

}  // namespace speclab

#endif  // SPECLAB_SPECTRAL_MODEL_HPP
