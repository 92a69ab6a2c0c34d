#ifndef SPECLAB_KERNELS_HPP
#define SPECLAB_KERNELS_HPP

#include <string>

namespace speclab {

enum class KernelForm { kPoisson, kFejer, kPower };

std::string to_string(KernelForm f);

/// Even integrable smoothing weight g(lambda) together with its scaled
/// Fourier transform a(t) = (1/2pi) \int e^{i lambda t} g(lambda) dlambda.
/// That convention makes the frequency/time functional identity exact and
/// is fixed project-wide.
///
///   POISSON: g = (1/pi) / (1 + lambda^2), a(t) = e^{-|t|} / (2pi).
///   FEJER:   a(t) = max(0, 1 - |t|/b) on compact support [-b, b],
///            g(lambda) = b sinc^2(lambda b / 2) >= 0.
///   POWER:   a(t) = (1 + t^2)^{-gamma/2}; g recovered numerically by a
///            Fourier cosine integral.
class SmoothingKernel {
 public:
  static SmoothingKernel poisson();
  static SmoothingKernel fejer(double bandwidth);
  static SmoothingKernel power(double gamma);

  KernelForm form() const { return form_; }

  /// a(t); closed form for every family.
  double fourier_transform(double t) const;

  /// g(lambda); numeric inverse transform for POWER (numerical_error on
  /// failure, and at lambda = 0 when gamma <= 1 where g diverges).
  double density(double lambda) const;

  /// Decay exponent gamma of |a(t)| <= C |t|^{-gamma}; +inf for POISSON
  /// (exponential decay) and FEJER (compact support).
  double decay_exponent() const;

  /// Radius of the support of a; +inf unless FEJER.
  double support_radius() const;

  double bandwidth() const { return bandwidth_; }
  double gamma() const { return gamma_; }

 private:
  SmoothingKernel(KernelForm form, double bandwidth, double gamma)
      : form_(form), bandwidth_(bandwidth), gamma_(gamma) {}

  KernelForm form_;
  double bandwidth_;
  double gamma_;
};

}  // namespace speclab

#endif  // SPECLAB_KERNELS_HPP
