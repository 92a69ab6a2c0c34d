#include "speclab/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace speclab {

namespace {
// FFTW's planner is not thread-safe; execution of a ready plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

void fft_inplace(std::vector<std::complex<double>>& data, int sign) {
  if (data.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf,
                            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fftw plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

std::vector<double> autocorrelation(std::span<const double> u) {
  const std::size_t n = u.size();
  std::size_t m = 1;
  while (m < 2 * n) m <<= 1;
  std::vector<std::complex<double>> work(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) work[i] = u[i];
  fft_inplace(work, -1);
  for (auto& z : work) z = std::norm(z);
  fft_inplace(work, +1);
  std::vector<double> corr(n);
  for (std::size_t k = 0; k < n; ++k)
    corr[k] = work[k].real() / static_cast<double>(m);
  return corr;
}

double toeplitz_quadratic_form(std::span<const double> u,
                               std::span<const double> a_values) {
  if (a_values.size() < u.size())
    throw std::invalid_argument("toeplitz_quadratic_form: need a value per lag");
  const auto corr = autocorrelation(u);
  double total = corr[0] * a_values[0];
  for (std::size_t m = 1; m < u.size(); ++m)
    total += 2.0 * corr[m] * a_values[m];
  return total;
}

}  // namespace speclab
