#include "speclab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace speclab {

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0, sum_abs = 0.0;
  s.min = std::numeric_limits<double>::infinity();
  s.max = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    sum += v;
    sum_abs += std::abs(v);
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  const double n = static_cast<double>(values.size());
  s.mean = sum / n;
  s.mean_abs = sum_abs / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / (n - 1.0));
    s.se = s.sd / std::sqrt(n);
  }
  return s;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty sample");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  double hi = values[mid];
  if (values.size() % 2 == 1) return hi;
  double lo = *std::max_element(values.begin(), values.begin() + mid);
  return 0.5 * (lo + hi);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_statistic_normal(std::span<const double> samples, double mu,
                           double sigma) {
  if (samples.empty()) throw std::invalid_argument("ks: empty sample");
  if (!(sigma > 0.0)) throw std::invalid_argument("ks: sigma must be > 0");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = normal_cdf((sorted[i] - mu) / sigma);
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max(d, std::max(hi - cdf, cdf - lo));
  }
  return d;
}

double ks_pvalue(double statistic, std::size_t n) {
  if (statistic <= 0.0) return 1.0;
  const double x = std::sqrt(static_cast<double>(n)) * statistic;
  // Kolmogorov tail series; converges fast for x > 0.3, and for smaller x
  // the p-value is 1 to double precision anyway.
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test_normal(std::span<const double> samples, double mu,
                        double sigma) {
  KsResult r;
  r.statistic = ks_statistic_normal(samples, mu, sigma);
  r.p_value = ks_pvalue(r.statistic, samples.size());
  return r;
}

}  // namespace speclab
