#ifndef SPECLAB_TEST_SUPPORT_HPP
#define SPECLAB_TEST_SUPPORT_HPP

// Independent numerical oracles for the test suite. Everything here is
// deliberately brute force and written against the project's Fourier
// conventions only -- no calls into the library code under test.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace testsup {

inline constexpr double kPi = std::numbers::pi;

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-12);
}

/// Composite trapezoid of f on [a, b] with `nodes` panels.
inline double trapezoid(const std::function<double(double)>& f, double a,
                        double b, std::size_t nodes) {
  const double h = (b - a) / static_cast<double>(nodes);
  double sum = 0.5 * (f(a) + f(b));
  for (std::size_t k = 1; k < nodes; ++k) {
    sum += f(a + h * static_cast<double>(k));
  }
  return sum * h;
}

/// r(t) = \int e^{i lambda t} f dlambda = 2 \int_0^inf cos(lambda t) f dlambda
/// for even f, by brute-force trapezoid on [cut, half_width] plus an analytic
/// patch for an origin singularity f ~ f0 * lambda^{-2u} on [0, cut).
/// With u = 0 (no singularity) the patch degenerates to f0 * cut.
inline double fourier_cos_oracle(const std::function<double(double)>& f,
                                 double t, double half_width,
                                 std::size_t nodes, double u = 0.0,
                                 double f0 = 0.0) {
  const double cut = half_width / static_cast<double>(nodes);
  const double patch = f0 * std::pow(cut, 1.0 - 2.0 * u) / (1.0 - 2.0 * u);
  const auto integrand = [&](double lam) { return std::cos(lam * t) * f(lam); };
  return 2.0 * (patch + trapezoid(integrand, cut, half_width, nodes - 1));
}

/// Direct O(n) discrete evaluation of the continuous periodogram
/// |dt sum_k e^{i lambda t_k} y_k|^2 / (2 pi T) at one frequency.
inline double direct_periodogram(const std::vector<double>& values, double dt,
                                 double horizon, double lambda) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double t = dt * static_cast<double>(k);
    acc += values[k] * std::polar(1.0, lambda * t);
  }
  const double mod = std::abs(acc) * dt;
  return mod * mod / (2.0 * kPi * horizon);
}

}  // namespace testsup

#endif  // SPECLAB_TEST_SUPPORT_HPP
