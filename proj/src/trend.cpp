#include "speclab/trend.hpp"

#include <cmath>
#include <stdexcept>

namespace speclab {

TrendSpec TrendSpec::zero() { return TrendSpec{TrendForm::kZero, 0.0, 1.0}; }

TrendSpec TrendSpec::shifted_power(double scale_c, double beta) {
  if (!(scale_c >= 0.0))
    throw std::invalid_argument("trend: scale C must be >= 0");
  if (!(beta > 0.25))
    throw std::invalid_argument(
        "trend: decay exponent beta must exceed 1/4 (robustness hypothesis)");
  return TrendSpec{TrendForm::kShiftedPower, scale_c, beta};
}

double TrendSpec::eval(double t) const {
  if (!(t >= 0.0)) throw std::domain_error("trend is defined for t >= 0");
  switch (form) {
    case TrendForm::kZero:
      return 0.0;
    case TrendForm::kShiftedPower:
      return scale_c * std::pow(1.0 + t, -beta);
  }
  return 0.0;
}

BoundCheck verify_bound(const std::function<double(double)>& trend, double c,
                        double beta, std::span<const double> t_grid) {
  BoundCheck out;
  for (double t : t_grid) {
    if (!(t > 0.0))
      throw std::invalid_argument("verify_bound: grid times must be positive");
    if (c <= 0.0) {
      if (trend(t) != 0.0) out.satisfied = false;
      continue;
    }
    const double ratio = std::abs(trend(t)) * std::pow(t, beta) / c;
    out.max_ratio = std::max(out.max_ratio, ratio);
    if (ratio > 1.0) out.satisfied = false;
  }
  return out;
}

BoundCheck verify_bound(const TrendSpec& spec, std::span<const double> t_grid) {
  return verify_bound([&](double t) { return spec.eval(t); }, spec.scale_c,
                      spec.beta, t_grid);
}

}  // namespace speclab
