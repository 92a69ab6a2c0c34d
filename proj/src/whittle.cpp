#include "speclab/whittle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "speclab/errors.hpp"
#include "speclab/quadrature.hpp"

namespace speclab {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format_theta(std::span<const double> theta) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (i > 0) out << ", ";
    out << theta[i];
  }
  out << ")";
  return out.str();
}

/// Trapezoid pass over the periodogram grid, skipping the zero-frequency
/// bin for families with an origin pole. Calls visit(lambda, ordinate,
/// weight) with the quadrature weight already folded in.
template <typename Visitor>
void for_each_bin(const Periodogram& pg, bool skip_origin, Visitor&& visit) {
  const std::size_t last = pg.ordinates.size() - 1;
  const std::size_t zero = pg.zero_index();
  const double step = pg.freq_step();
  for (std::size_t m = 0; m <= last; ++m) {
    if (skip_origin && m == zero) continue;
    const double wt = ((m == 0 || m == last) ? 0.5 : 1.0) * step;
    visit(pg.frequencies[m], pg.ordinates[m], wt);
  }
}

struct ProfiledTerms {
  double log_shape = 0.0;   // \int log(phi) w
  double weight_mass = 0.0; // \int w
  double data_term = 0.0;   // \int (I/phi) w
};

ProfiledTerms accumulate_profiled(const Periodogram& pg,
                                  const SpectralModel& shape_model,
                                  bool skip_origin, const WeightSpec& weight) {
  ProfiledTerms terms;
  for_each_bin(pg, skip_origin,
               [&](double lambda, double ordinate, double wt) {
                 const double w = weight(lambda);
                 if (w == 0.0) return;
                 const double phi = shape_model.density(lambda);
                 terms.log_shape += wt * w * std::log(phi);
                 terms.weight_mass += wt * w;
                 terms.data_term += wt * w * ordinate / phi;
               });
  return terms;
}

double profiled_value(const ProfiledTerms& terms, double scale) {
  return (terms.log_shape + terms.weight_mass * std::log(scale) +
          terms.data_term / scale) /
         (4.0 * kPi);
}

}  // namespace

std::string to_string(WeightForm form) {
  switch (form) {
    case WeightForm::kRational: return "RATIONAL";
    case WeightForm::kConstantOnBand: return "CONSTANT_ON_BAND";
  }
  return "UNKNOWN";
}

WeightSpec WeightSpec::rational() { return {WeightForm::kRational, 0.0}; }

WeightSpec WeightSpec::constant_on_band(double half_width) {
  if (!(half_width > 0.0)) {
    throw std::invalid_argument(
        "weight: CONSTANT_ON_BAND half-width must be positive");
  }
  return {WeightForm::kConstantOnBand, half_width};
}

double WeightSpec::operator()(double lambda) const {
  switch (form) {
    case WeightForm::kRational:
      return 1.0 / (1.0 + lambda * lambda);
    case WeightForm::kConstantOnBand:
      return std::abs(lambda) <= band ? 1.0 : 0.0;
  }
  return 0.0;
}

ModelFamily ModelFamily::ou() {
  return ModelFamily(Family::kOu, {"rate", "sigma2"}, 1, std::nullopt);
}

ModelFamily ModelFamily::frbm_fixed_v(double v) {
  if (!(v > 0.0)) {
    throw std::invalid_argument("model family: fixed v must be positive");
  }
  return ModelFamily(Family::kFrbm, {"u", "c"}, 1, v);
}

ModelFamily ModelFamily::frbm() {
  return ModelFamily(Family::kFrbm, {"u", "v", "c"}, 2, std::nullopt);
}

SpectralModel ModelFamily::instantiate(std::span<const double> theta) const {
  if (theta.size() != dimension()) {
    throw std::invalid_argument("model family: expected " +
                                std::to_string(dimension()) +
                                " parameters, got " +
                                std::to_string(theta.size()));
  }
  switch (family_) {
    case Family::kOu:
      return SpectralModel::ou(theta[0], theta[1]);
    case Family::kFrbm:
      if (fixed_v_) return SpectralModel::frbm(theta[0], *fixed_v_, theta[1]);
      return SpectralModel::frbm(theta[0], theta[1], theta[2]);
    case Family::kScaled:
      break;
  }
  throw std::logic_error("model family: unsupported family tag");
}

double whittle_objective(const Periodogram& pg, const ModelFamily& family,
                         std::span<const double> theta,
                         const WhittleConfig& cfg) {
  const SpectralModel model = family.instantiate(theta);
  double sum = 0.0;
  for_each_bin(pg, family.origin_pole(),
               [&](double lambda, double ordinate, double wt) {
                 const double w = cfg.weight(lambda);
                 if (w == 0.0) return;
                 const double f = model.density(lambda);
                 if (!(f > 0.0)) {
                   throw std::domain_error(
                       "whittle objective: nonpositive density at lambda=" +
                       std::to_string(lambda) + " for theta=" +
                       format_theta(theta));
                 }
                 sum += wt * w * (std::log(f) + ordinate / f);
               });
  return sum / (4.0 * kPi);
}

std::vector<double> estimating_equation_residual(const Periodogram& pg,
                                                 const ModelFamily& family,
                                                 std::span<const double> theta,
                                                 const WhittleConfig& cfg) {
  const SpectralModel model = family.instantiate(theta);
  const std::size_t dim = family.dimension();
  std::vector<double> residual(dim, 0.0);
  std::vector<double> shifted(theta.begin(), theta.end());
  for (std::size_t i = 0; i < dim; ++i) {
    const double step = 1e-6 * (1.0 + std::abs(theta[i]));
    shifted[i] = theta[i] + step;
    const SpectralModel plus = family.instantiate(shifted);
    shifted[i] = theta[i] - step;
    const SpectralModel minus = family.instantiate(shifted);
    shifted[i] = theta[i];

    double sum = 0.0;
    for_each_bin(pg, family.origin_pole(),
                 [&](double lambda, double ordinate, double wt) {
                   const double w = cfg.weight(lambda);
                   if (w == 0.0) return;
                   const double grad_inv = (1.0 / plus.density(lambda) -
                                            1.0 / minus.density(lambda)) /
                                           (2.0 * step);
                   sum += wt * (ordinate - model.density(lambda)) * w *
                          grad_inv;
                 });
    residual[i] = sum;
  }
  return residual;
}

EstimateResult estimate(const Periodogram& pg, const ModelFamily& family,
                        const WhittleConfig& cfg,
                        std::vector<double> theta_init) {
  const std::size_t dim = family.dimension();
  if (cfg.lower.size() != dim || cfg.upper.size() != dim ||
      theta_init.size() != dim) {
    throw std::invalid_argument(
        "estimate: parameter/bound dimension mismatch for family with " +
        std::to_string(dim) + " parameters");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (theta_init[i] < cfg.lower[i] || theta_init[i] > cfg.upper[i]) {
      throw std::invalid_argument("estimate: initial point outside bounds at " +
                                  family.parameter_names()[i]);
    }
  }

  constexpr double kInfeasible = std::numeric_limits<double>::infinity();
  EstimateResult result;

  const std::optional<std::size_t> scale = family.scale_index();
  if (cfg.profile_scale && scale) {
    const std::size_t si = *scale;
    const double scale_lo = cfg.lower[si];
    const double scale_hi = cfg.upper[si];

    const auto embed = [&](const std::vector<double>& shape) {
      std::vector<double> full(dim);
      std::size_t k = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        full[i] = (i == si) ? 1.0 : shape[k++];
      }
      return full;
    };
    const auto profiled = [&](const std::vector<double>& shape)
        -> std::pair<double, double> {  // (objective, scale)
      SpectralModel shape_model = family.instantiate(embed(shape));
      const ProfiledTerms terms = accumulate_profiled(
          pg, shape_model, family.origin_pole(), cfg.weight);
      double s = terms.data_term / terms.weight_mass;
      s = std::clamp(s, scale_lo, scale_hi);
      return {profiled_value(terms, s), s};
    };

    std::vector<double> shape_init, shape_lo, shape_hi;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == si) continue;
      shape_init.push_back(theta_init[i]);
      shape_lo.push_back(cfg.lower[i]);
      shape_hi.push_back(cfg.upper[i]);
    }

    if (shape_init.empty()) {
      // Pure-scale family: the closed-form solution is the optimum.
      SpectralModel shape_model = family.instantiate(embed({}));
      const ProfiledTerms terms = accumulate_profiled(
          pg, shape_model, family.origin_pole(), cfg.weight);
      double raw = terms.data_term / terms.weight_mass;
      const double s = std::clamp(raw, scale_lo, scale_hi);
      result.theta_hat = embed({});
      result.theta_hat[si] = s;
      result.objective = profiled_value(terms, s);
      result.converged = true;
      result.boundary_hit = (s != raw);
      result.evaluations = 1;
      return result;
    }

    const auto objective = [&](const std::vector<double>& shape) {
      try {
        return profiled(shape).first;
      } catch (const std::invalid_argument&) {
        return kInfeasible;  // box corner outside the family's joint domain
      }
    };
    const NelderMeadResult nm = nelder_mead(objective, shape_init, shape_lo,
                                            shape_hi, cfg.optimizer);
    const auto [value, s] = profiled(nm.point);
    const double scale_margin = 1e-6 * (scale_hi - scale_lo);
    result.theta_hat = embed(nm.point);
    result.theta_hat[si] = s;
    result.objective = value;
    result.converged = nm.converged;
    result.boundary_hit = nm.boundary_hit || s - scale_lo <= scale_margin ||
                          scale_hi - s <= scale_margin;
    result.evaluations = nm.evaluations;
    return result;
  }

  const auto objective = [&](const std::vector<double>& theta) {
    try {
      return whittle_objective(pg, family, theta, cfg);
    } catch (const std::invalid_argument&) {
      return kInfeasible;
    }
  };
  const NelderMeadResult nm =
      nelder_mead(objective, std::move(theta_init), cfg.lower, cfg.upper,
                  cfg.optimizer);
  result.theta_hat = nm.point;
  result.objective = nm.value;
  result.converged = nm.converged;
  result.boundary_hit = nm.boundary_hit;
  result.evaluations = nm.evaluations;
  return result;
}

double asymptotic_variance(const SpectralModel& model,
                           const SmoothingKernel& kernel) {
  const auto integrand = [&](double lambda) {
    const double f = model.density(lambda);
    const double g = kernel.density(lambda);
    return f * f * g * g;
  };
  // Even integrand: work on [0, inf) and extend geometrically until the
  // last doubling block is negligible.
  double edge = 64.0;
  double total = integrate(integrand, 0.0, edge, 1e-10);
  for (int round = 0; round < 24; ++round) {
    const double block = integrate(integrand, edge, 2.0 * edge, 1e-10);
    total += block;
    edge *= 2.0;
    if (std::abs(block) <= 1e-6 * std::abs(total) + 1e-30) {
      return 8.0 * kPi * total;
    }
  }
  throw numerical_error(
      "asymptotic variance: tail of f^2 g^2 does not decay (divergent "
      "integral?)",
      std::abs(total));
}

}  // namespace speclab
