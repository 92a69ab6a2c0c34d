#ifndef SPECLAB_TREND_HPP
#define SPECLAB_TREND_HPP

#include <functional>
#include <span>

namespace speclab {

enum class TrendForm { kZero, kShiftedPower };

/// Deterministic trend M(t). The shifted-power form C (1+t)^{-beta} obeys
/// |M(t)| <= C t^{-beta} for t > 0 while staying bounded at t = 0.
struct TrendSpec {
  static TrendSpec zero();
  static TrendSpec shifted_power(double scale_c, double beta);

  double eval(double t) const;

  TrendForm form = TrendForm::kZero;
  double scale_c = 0.0;
  double beta = 1.0;  // decay exponent, > 1/4
};

struct BoundCheck {
  bool satisfied = true;
  double max_ratio = 0.0;  // max |M(t)| t^beta / C over the grid
};

/// Checks |M(t)| <= C t^{-beta} on a grid of positive times.
BoundCheck verify_bound(const std::function<double(double)>& trend, double c,
                        double beta, std::span<const double> t_grid);
BoundCheck verify_bound(const TrendSpec& spec, std::span<const double> t_grid);

}  // namespace speclab

#endif  // SPECLAB_TREND_HPP
