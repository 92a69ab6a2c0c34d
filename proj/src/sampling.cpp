#include "speclab/sampling.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "speclab/errors.hpp"
#include "speclab/fft.hpp"

namespace speclab {

namespace {
bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
constexpr double kEigTol = 1e-8;
constexpr int kMaxDoublings = 3;
}  // namespace

SamplingGrid::SamplingGrid(double horizon_, std::size_t n_)
    : horizon(horizon_), n(n_) {
  if (!(horizon > 0.0))
    throw std::invalid_argument("grid: horizon must be > 0");
  if (n < 64 || !is_power_of_two(n))
    throw std::invalid_argument("grid: n must be a power of two >= 64");
}

PathSampler::PathSampler(const SpectralModel& model, const SamplingGrid& grid)
    : grid_(grid) {
  const double dt = grid.dt();
  double min_eig = 0.0;
  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt) {
    const std::size_t m = (2 * grid.n) << attempt;
    std::vector<std::complex<double>> circ(m);
    for (std::size_t j = 0; j <= m / 2; ++j)
      circ[j] = model.covariance(static_cast<double>(j) * dt);
    for (std::size_t j = m / 2 + 1; j < m; ++j) circ[j] = circ[m - j];
    fft_inplace(circ, -1);

    double max_eig = 0.0;
    min_eig = 0.0;
    for (const auto& z : circ) {
      max_eig = std::max(max_eig, z.real());
      min_eig = std::min(min_eig, z.real());
    }
    if (min_eig < -kEigTol * max_eig) continue;

    weights_.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      const double eig = std::max(circ[j].real(), 0.0);
      weights_[j] = std::sqrt(eig / static_cast<double>(m));
    }
    return;
  }
  throw embedding_error("EMBEDDING_NOT_PSD: circulant embedding has negative "
                        "eigenvalues after retry ladder",
                        min_eig);
}

SampledPath PathSampler::sample(std::uint64_t seed) const {
  const std::size_t m = weights_.size();
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::complex<double>> modes(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double re = normal(gen);
    const double im = normal(gen);
    modes[j] = weights_[j] * std::complex<double>(re, im);
  }
  fft_inplace(modes, -1);
  SampledPath path{grid_, std::vector<double>(grid_.n), PathLabel::kClean,
                   seed};
  for (std::size_t k = 0; k < grid_.n; ++k) path.values[k] = modes[k].real();
  return path;
}

SampledPath sample_gaussian_path(const SpectralModel& model,
                                 const SamplingGrid& grid,
                                 std::uint64_t seed) {
  return PathSampler(model, grid).sample(seed);
}

SampledPath contaminate(const SampledPath& path, const TrendSpec& trend) {
  if (path.label != PathLabel::kClean)
    throw std::logic_error("contaminate: path is already contaminated");
  SampledPath out = path;
  out.label = PathLabel::kContaminated;
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] += trend.eval(out.grid.time(k));
  return out;
}

}  // namespace speclab
