#include "speclab/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "speclab/errors.hpp"
#include "speclab/quadrature.hpp"

namespace speclab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

std::string to_string(KernelForm f) {
  switch (f) {
    case KernelForm::kPoisson:
      return "poisson";
    case KernelForm::kFejer:
      return "fejer";
    case KernelForm::kPower:
      return "power";
  }
  return "?";
}

SmoothingKernel SmoothingKernel::poisson() {
  return SmoothingKernel(KernelForm::kPoisson, 0.0, kInf);
}

SmoothingKernel SmoothingKernel::fejer(double bandwidth) {
  if (!(bandwidth > 0.0))
    throw std::invalid_argument("fejer: bandwidth must be > 0");
  return SmoothingKernel(KernelForm::kFejer, bandwidth, kInf);
}

SmoothingKernel SmoothingKernel::power(double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("power: gamma must be > 0");
  return SmoothingKernel(KernelForm::kPower, 0.0, gamma);
}

double SmoothingKernel::fourier_transform(double t) const {
  if (!std::isfinite(t))
    throw std::domain_error("kernel transform: lag must be finite");
  switch (form_) {
    case KernelForm::kPoisson:
      return std::exp(-std::abs(t)) / (2.0 * kPi);
    case KernelForm::kFejer:
      return std::max(0.0, 1.0 - std::abs(t) / bandwidth_);
    case KernelForm::kPower:
      return std::pow(1.0 + t * t, -0.5 * gamma_);
  }
  return 0.0;
}

double SmoothingKernel::density(double lambda) const {
  const double x = std::abs(lambda);
  switch (form_) {
    case KernelForm::kPoisson:
      return (1.0 / kPi) / (1.0 + lambda * lambda);
    case KernelForm::kFejer: {
      const double half = 0.5 * x * bandwidth_;
      if (half < 1e-8) return bandwidth_ * (1.0 - half * half / 3.0);
      const double s = std::sin(half) / half;
      return bandwidth_ * s * s;
    }
    case KernelForm::kPower: {
      const auto a = [this](double t) {
        return std::pow(1.0 + t * t, -0.5 * gamma_);
      };
      if (x < 1e-9) {
        if (gamma_ <= 1.0)
          throw numerical_error(
              "power kernel density diverges at the origin for gamma <= 1");
        return 2.0 * integrate_to_inf(a, 0.0, 0.0, 1e-10);
      }
      return 2.0 * fourier_cos_tail(a, 0.0, x, 1e-10);
    }
  }
  return 0.0;
}

double SmoothingKernel::decay_exponent() const { return gamma_; }

double SmoothingKernel::support_radius() const {
  return form_ == KernelForm::kFejer ? bandwidth_ : kInf;
}

}  // namespace speclab
