#include "speclab/spectral_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "speclab/errors.hpp"
#include "speclab/quadrature.hpp"

namespace speclab {

namespace {
constexpr double kPi = std::numbers::pi;

double frbm_shape(double lambda, double u, double v) {
  return std::pow(std::abs(lambda), -2.0 * u) *
         std::pow(1.0 + lambda * lambda, -v);
}

// r(t) for the unit-scale FRBM shape, t >= 0. The origin singularity
// lambda^{-2u} is integrable but breaks naive rules, so the inner piece is
// regularized by the substitution lambda = mu^{1/(1-2u)}; the tail is a
// Fourier cosine integral with cycle acceleration.
double frbm_covariance_shape(double t, double u, double v) {
  const double p = 1.0 / (1.0 - 2.0 * u);
  const auto inner_reg = [&](double mu) {
    const double lambda = std::pow(mu, p);
    return p * std::cos(lambda * t) *
           std::pow(1.0 + lambda * lambda, -v);
  };
  if (t == 0.0) {
    const double inner = integrate(inner_reg, 0.0, 1.0, 0.0, 1e-10);
    const double tail = integrate_to_inf(
        [&](double lam) { return frbm_shape(lam, u, v); }, 1.0, 0.0, 1e-10);
    return 2.0 * (inner + tail);
  }
  // Keep the non-substituted region free of oscillation: the split point
  // stays under a quarter period.
  const double split = std::min(1.0, 0.5 * kPi / t);
  const double inner =
      integrate(inner_reg, 0.0, std::pow(split, 1.0 - 2.0 * u), 0.0, 1e-10);
  const auto shape = [&](double lam) { return frbm_shape(lam, u, v); };
  double tail = 0.0;
  double epsabs = 1e-10;
  for (;;) {
    try {
      tail = fourier_cos_tail(shape, split, t, epsabs);
      break;
    } catch (const numerical_error&) {
      epsabs *= 100.0;
      if (epsabs > 1e-4) throw;
    }
  }
  return 2.0 * (inner + tail);
}
}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::kOu:
      return "ou";
    case Family::kFrbm:
      return "frbm";
    case Family::kScaled:
      return "scaled";
  }
  return "?";
}

std::string to_string(MemoryClass m) {
  switch (m) {
    case MemoryClass::kShort:
      return "SM";
    case MemoryClass::kIntermediate:
      return "IM";
    case MemoryClass::kLong:
      return "LM";
  }
  return "?";
}

DecayRate DecayRate::power(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 1.0))
    throw std::invalid_argument("decay exponent must lie in (0, 1]");
  return DecayRate{false, alpha};
}

DecayRate DecayRate::exponential() { return DecayRate{true, 0.0}; }

SpectralModel SpectralModel::ou(double rate, double sigma2) {
  if (!(rate > 0.0)) throw std::invalid_argument("ou: rate must be > 0");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("ou: sigma2 must be > 0");
  SpectralModel m;
  m.family_ = m.base_family_ = Family::kOu;
  m.theta_ = {rate, sigma2};
  return m;
}

SpectralModel SpectralModel::frbm(double u, double v, double c) {
  if (!(u > 0.0 && u < 0.5))
    throw std::invalid_argument("frbm: u must lie in (0, 1/2)");
  if (!(v > 0.0)) throw std::invalid_argument("frbm: v must be > 0");
  if (!(u + v > 0.5)) throw std::invalid_argument("frbm: u + v must exceed 1/2");
  if (!(c > 0.0)) throw std::invalid_argument("frbm: c must be > 0");
  SpectralModel m;
  m.family_ = m.base_family_ = Family::kFrbm;
  m.theta_ = {u, v, c};
  return m;
}

SpectralModel SpectralModel::scaled(const SpectralModel& base, double factor) {
  if (!(factor > 0.0))
    throw std::invalid_argument("scaled: factor must be > 0");
  SpectralModel m = base;
  m.family_ = Family::kScaled;
  m.scale_ = base.scale_ * factor;
  return m;
}

double SpectralModel::density(double lambda) const {
  if (!std::isfinite(lambda))
    throw std::domain_error("density: frequency must be finite");
  switch (base_family_) {
    case Family::kOu: {
      const double rate = theta_[0], sigma2 = theta_[1];
      return scale_ * sigma2 * rate / (kPi * (rate * rate + lambda * lambda));
    }
    case Family::kFrbm: {
      if (lambda == 0.0) throw std::domain_error("frbm density: origin singularity");
      return scale_ * theta_[2] * frbm_shape(lambda, theta_[0], theta_[1]);
    }
    case Family::kScaled:
      break;
  }
  throw std::logic_error("unreachable family");
}

double SpectralModel::covariance(double t) const {
  if (!std::isfinite(t)) throw std::domain_error("covariance: lag must be finite");
  switch (base_family_) {
    case Family::kOu:
      return scale_ * theta_[1] * std::exp(-theta_[0] * std::abs(t));
    case Family::kFrbm:
      return scale_ * theta_[2] *
             frbm_covariance_shape(std::abs(t), theta_[0], theta_[1]);
    case Family::kScaled:
      break;
  }
  throw std::logic_error("unreachable family");
}

MemoryClass SpectralModel::memory() const {
  // Closed-form classification per family; scaling preserves integrability.
  switch (base_family_) {
    case Family::kOu:
      return MemoryClass::kShort;
    case Family::kFrbm:
      return MemoryClass::kLong;  // u > 0 by construction: pole at origin
    case Family::kScaled:
      break;
  }
  throw std::logic_error("unreachable family");
}

DecayRate SpectralModel::alpha_decay() const {
  switch (base_family_) {
    case Family::kOu:
      return DecayRate::exponential();
    case Family::kFrbm:
      return DecayRate::power(1.0 - 2.0 * theta_[0]);
    case Family::kScaled:
      break;
  }
  throw std::logic_error("unreachable family");
}

double frbm_covariance_asymptote(const SpectralModel& model, double t,
                                 std::optional<double> sine_arg) {
  if (model.base_family() != Family::kFrbm)
    throw std::domain_error("covariance asymptote is defined for frbm only");
  const double u = model.theta()[0];
  const double v = model.theta()[1];
  const double c = model.theta()[2] * model.scale();
  if (!(v > 0.5))
    throw std::domain_error("covariance asymptote requires v > 1/2");
  if (!(t > 0.0))
    throw std::domain_error("covariance asymptote requires t > 0");
  const double arg = sine_arg.value_or(u);
  return 2.0 * c * std::sin(kPi * arg) * std::tgamma(1.0 - 2.0 * u) *
         std::pow(t, 2.0 * u - 1.0);
}

}  // namespace speclab
