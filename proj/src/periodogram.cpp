#include "speclab/periodogram.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "speclab/fft.hpp"

namespace speclab {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Periodogram compute_periodogram(const SampledPath& path) {
  const std::size_t n = path.grid.n;
  const double dt = path.grid.dt();
  const double horizon = path.grid.horizon;

  // DFT_j = sum_k e^{+2 pi i jk/n} Y_k matches e^{i lambda_j t_k} on the
  // grid, which is the backward transform under this project's sign
  // convention.
  std::vector<std::complex<double>> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = path.values[k];
  fft_inplace(z, +1);

  Periodogram pg{path.grid, std::vector<double>(n + 1),
                 std::vector<double>(n + 1)};
  const double freq_step = 2.0 * kPi / horizon;
  const double norm = dt * dt / (2.0 * kPi * horizon);
  const std::size_t half = n / 2;
  for (std::size_t m = 0; m <= n; ++m) {
    pg.frequencies[m] =
        freq_step * (static_cast<double>(m) - static_cast<double>(half));
  }
  // The path is real, so |DFT_{-j}| = |DFT_j|; fill j >= 0 and mirror to
  // make evenness exact rather than exact-up-to-rounding.
  for (std::size_t j = 0; j <= half; ++j) {
    const double value = norm * std::norm(z[j]);
    pg.ordinates[half + j] = value;
    pg.ordinates[half - j] = value;
  }
  return pg;
}

double periodogram_at(const SampledPath& path, double lambda) {
  const double dt = path.grid.dt();
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < path.grid.n; ++k) {
    const double t = path.grid.time(k);
    sum += std::polar(path.values[k], lambda * t);
  }
  return std::norm(dt * sum) / (2.0 * kPi * path.grid.horizon);
}

double smoothed_functional(const Periodogram& pg,
                           const std::function<double(double)>& g) {
  const std::size_t last = pg.ordinates.size() - 1;
  double sum = 0.0;
  for (std::size_t m = 0; m <= last; ++m) {
    const double weight = (m == 0 || m == last) ? 0.5 : 1.0;
    sum += weight * g(pg.frequencies[m]) * pg.ordinates[m];
  }
  return sum * pg.freq_step();
}

double smoothed_functional(const Periodogram& pg,
                           const SmoothingKernel& kernel) {
  return smoothed_functional(
      pg, [&kernel](double lambda) { return kernel.density(lambda); });
}

double smoothed_functional(const Periodogram& pg,
                           std::span<const double> g_table) {
  const std::size_t last = pg.ordinates.size() - 1;
  double sum = 0.0;
  for (std::size_t m = 0; m <= last; ++m) {
    const double weight = (m == 0 || m == last) ? 0.5 : 1.0;
    sum += weight * g_table[m] * pg.ordinates[m];
  }
  return sum * pg.freq_step();
}

std::vector<double> tabulate_kernel(const SamplingGrid& grid,
                                    const SmoothingKernel& kernel) {
  const double freq_step = 2.0 * kPi / grid.horizon;
  const std::size_t half = grid.n / 2;
  std::vector<double> table(grid.n + 1);
  for (std::size_t j = 0; j <= half; ++j) {
    const double g = kernel.density(freq_step * static_cast<double>(j));
    table[half + j] = g;
    table[half - j] = g;
  }
  return table;
}

double quadratic_form_functional(const SampledPath& path,
                                 const SmoothingKernel& kernel) {
  const std::size_t n = path.grid.n;
  const double dt = path.grid.dt();
  std::vector<double> a_values(n);
  for (std::size_t m = 0; m < n; ++m) {
    a_values[m] = kernel.fourier_transform(static_cast<double>(m) * dt);
  }
  const double form = toeplitz_quadratic_form(path.values, a_values);
  return form * dt * dt / path.grid.horizon;
}

}  // namespace speclab
