#ifndef SPECLAB_FFT_HPP
#define SPECLAB_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace speclab {

// In-place complex DFT, sign = -1 forward (e^{-i2pi jk/n}), +1 inverse
// (unnormalized). Backed by FFTW; planner access is serialized internally
// so calls are safe from concurrent workers.
void fft_inplace(std::vector<std::complex<double>>& data, int sign);

// Cross-correlation c_m = sum_i u_i u_{i+m} for m = 0..len-1, via
// zero-padded FFT.
std::vector<double> autocorrelation(std::span<const double> u);

// sum_{j,k} u_j u_k a(|j-k|) where a_values[m] holds a at lag m.
// O(n log n) through the autocorrelation.
double toeplitz_quadratic_form(std::span<const double> u,
                               std::span<const double> a_values);

}  // namespace speclab

#endif  // SPECLAB_FFT_HPP
