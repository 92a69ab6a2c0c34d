#ifndef SPECLAB_SAMPLING_HPP
#define SPECLAB_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "speclab/spectral_model.hpp"
#include "speclab/trend.hpp"

namespace speclab {

/// Uniform grid t_k = k * dt, k = 0..n-1, over [0, T). n is a power of two
/// (>= 64) so every downstream transform reuses the same FFT pipeline.
struct SamplingGrid {
  SamplingGrid(double horizon, std::size_t n);

  double dt() const { return horizon / static_cast<double>(n); }
  double time(std::size_t k) const { return static_cast<double>(k) * dt(); }

  double horizon;
  std::size_t n;
};

enum class PathLabel { kClean, kContaminated };

struct SampledPath {
  SamplingGrid grid;
  std::vector<double> values;
  PathLabel label = PathLabel::kClean;
  std::uint64_t seed = 0;
};

/// Exact-in-distribution Gaussian sampling on the grid via circulant
/// embedding of the covariance matrix [r((j-k) dt)]. The minimal embedding
/// (size 2n) may fail nonnegativity for long-memory covariances; the
/// constructor doubles the embedding up to 3 times before surfacing
/// embedding_error (EMBEDDING_NOT_PSD) with the offending eigenvalue.
/// Eigenvalues in [-1e-8 * max, 0) are clipped to zero.
///
/// Construction does all covariance evaluations once; sample() is cheap and
/// safe to call from concurrent workers.
class PathSampler {
 public:
  PathSampler(const SpectralModel& model, const SamplingGrid& grid);

  /// One realization; deterministic given the seed.
  SampledPath sample(std::uint64_t seed) const;

  std::size_t embedding_size() const { return weights_.size(); }

 private:
  SamplingGrid grid_;
  std::vector<double> weights_;  // sqrt(eigenvalue / m) per Fourier mode
};

SampledPath sample_gaussian_path(const SpectralModel& model,
                                 const SamplingGrid& grid,
                                 std::uint64_t seed);

/// X(t_k) = Y(t_k) + M(t_k). The input must be CLEAN.
SampledPath contaminate(const SampledPath& path, const TrendSpec& trend);

}  // namespace speclab

#endif  // SPECLAB_SAMPLING_HPP
