#ifndef SPECLAB_PERIODOGRAM_HPP
#define SPECLAB_PERIODOGRAM_HPP

#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

#include "speclab/kernels.hpp"
#include "speclab/sampling.hpp"

namespace speclab {

/// Continuous periodogram I_T(lambda_j) = |dt sum_k e^{i lambda_j t_k}
/// Y(t_k)|^2 / (2 pi T) on the symmetric FFT grid lambda_j = 2 pi j / T,
/// j = -n/2..n/2. Ordinates are nonnegative and exactly even in j.
struct Periodogram {
  SamplingGrid grid;
  std::vector<double> frequencies;  // n + 1 entries
  std::vector<double> ordinates;

  std::size_t zero_index() const { return grid.n / 2; }
  double freq_step() const { return 2.0 * std::numbers::pi / grid.horizon; }
  double nyquist() const { return std::numbers::pi / grid.dt(); }
};

Periodogram compute_periodogram(const SampledPath& path);

/// Direct-summation evaluation at an arbitrary frequency. O(n) per call;
/// debug oracle for the FFT pipeline.
double periodogram_at(const SampledPath& path, double lambda);

/// Trapezoid quadrature of \int g(lambda) I_T(lambda) dlambda truncated at
/// the Nyquist frequency.
double smoothed_functional(const Periodogram& pg,
                           const std::function<double(double)>& g);
double smoothed_functional(const Periodogram& pg, const SmoothingKernel& kernel);
/// Same quadrature with g pre-tabulated on the periodogram grid; lets
/// Monte Carlo loops evaluate the kernel once per grid, not per path.
double smoothed_functional(const Periodogram& pg,
                           std::span<const double> g_table);

/// kernel.density on every grid frequency, in bin order.
std::vector<double> tabulate_kernel(const SamplingGrid& grid,
                                    const SmoothingKernel& kernel);

/// Time-domain evaluation of the same functional through the Toeplitz
/// quadratic form (1/T) dt^2 sum_{j,k} Y_j Y_k a(t_j - t_k), O(n log n).
double quadratic_form_functional(const SampledPath& path,
                                 const SmoothingKernel& kernel);

}  // namespace speclab

#endif  // SPECLAB_PERIODOGRAM_HPP
