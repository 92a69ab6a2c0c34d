#ifndef SPECLAB_STATS_HPP
#define SPECLAB_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace speclab {

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;        // sample standard deviation (n-1)
  double se = 0.0;        // standard error of the mean
  double mean_abs = 0.0;
  double min = 0.0;
  double max = 0.0;
};

Summary summarize(std::span<const double> values);

double median(std::vector<double> values);

double normal_cdf(double x);

// One-sample Kolmogorov-Smirnov statistic sup|F_n - Phi((x-mu)/sigma)|.
double ks_statistic_normal(std::span<const double> samples, double mu,
                           double sigma);

// Asymptotic p-value P(sqrt(n) D_n > sqrt(n) d) from the Kolmogorov
// distribution tail 2 sum (-1)^{k-1} exp(-2 k^2 n d^2).
double ks_pvalue(double statistic, std::size_t n);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

KsResult ks_test_normal(std::span<const double> samples, double mu,
                        double sigma);

}  // namespace speclab

#endif  // SPECLAB_STATS_HPP
