#ifndef SPECLAB_NELDER_MEAD_HPP
#define SPECLAB_NELDER_MEAD_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace speclab {

struct NelderMeadOptions {
  double tolerance = 1e-5;          // simplex diameter at convergence
  std::size_t max_evaluations = 2000;
  double initial_step = 0.1;        // relative to max(|x0_i|, 1)
};

struct NelderMeadResult {
  std::vector<double> point;
  double value = std::numeric_limits<double>::quiet_NaN();
  std::size_t evaluations = 0;
  bool converged = false;
  bool boundary_hit = false;  // optimum pinned to a box face
};

/// Derivative-free simplex minimization over the box [lower, upper].
/// Candidate vertices are projected onto the box, so the objective is never
/// evaluated outside it.
inline NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<double> x0, const std::vector<double>& lower,
    const std::vector<double>& upper, const NelderMeadOptions& options = {}) {
  const std::size_t dim = x0.size();
  if (dim == 0) throw std::invalid_argument("nelder_mead: empty start point");
  if (lower.size() != dim || upper.size() != dim) {
    throw std::invalid_argument("nelder_mead: bound dimension mismatch");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(lower[i] < upper[i])) {
      throw std::invalid_argument("nelder_mead: empty box");
    }
  }

  const auto project = [&](std::vector<double>& x) {
    for (std::size_t i = 0; i < dim; ++i) {
      x[i] = std::clamp(x[i], lower[i], upper[i]);
    }
  };
  project(x0);

  NelderMeadResult result;
  std::size_t evaluations = 0;
  const auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    return objective(x);
  };

  // Initial simplex: x0 plus one displaced vertex per coordinate.
  std::vector<std::vector<double>> simplex(dim + 1, x0);
  std::vector<double> values(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    double step = options.initial_step * std::max(std::abs(x0[i]), 1.0);
    if (x0[i] + step > upper[i]) step = -step;
    simplex[i + 1][i] += step;
    project(simplex[i + 1]);
  }
  for (std::size_t v = 0; v <= dim; ++v) values[v] = eval(simplex[v]);

  const auto order = [&]() {
    for (std::size_t a = 0; a <= dim; ++a) {
      std::size_t best = a;
      for (std::size_t b = a + 1; b <= dim; ++b) {
        if (values[b] < values[best]) best = b;
      }
      std::swap(values[a], values[best]);
      std::swap(simplex[a], simplex[best]);
    }
  };
  const auto diameter = [&]() {
    double d = 0.0;
    for (std::size_t v = 1; v <= dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) {
        d = std::max(d, std::abs(simplex[v][i] - simplex[0][i]));
      }
    }
    return d;
  };

  order();
  while (evaluations < options.max_evaluations) {
    if (diameter() < options.tolerance) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v][i];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    const auto blend = [&](double coeff) {
      std::vector<double> x(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        x[i] = centroid[i] + coeff * (centroid[i] - simplex[dim][i]);
      }
      project(x);
      return x;
    };

    std::vector<double> reflected = blend(1.0);
    const double f_reflected = eval(reflected);
    if (f_reflected < values[0]) {
      std::vector<double> expanded = blend(2.0);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        simplex[dim] = std::move(expanded);
        values[dim] = f_expanded;
      } else {
        simplex[dim] = std::move(reflected);
        values[dim] = f_reflected;
      }
    } else if (f_reflected < values[dim - 1]) {
      simplex[dim] = std::move(reflected);
      values[dim] = f_reflected;
    } else {
      const bool outside = f_reflected < values[dim];
      std::vector<double> contracted = blend(outside ? 0.5 : -0.5);
      const double f_contracted = eval(contracted);
      if (f_contracted < std::min(f_reflected, values[dim])) {
        simplex[dim] = std::move(contracted);
        values[dim] = f_contracted;
      } else {
        // Shrink every vertex toward the current best.
        for (std::size_t v = 1; v <= dim; ++v) {
          for (std::size_t i = 0; i < dim; ++i) {
            simplex[v][i] = 0.5 * (simplex[v][i] + simplex[0][i]);
          }
          values[v] = eval(simplex[v]);
          if (evaluations >= options.max_evaluations) break;
        }
      }
    }
    order();
  }

  result.point = simplex[0];
  result.value = values[0];
  result.evaluations = evaluations;
  for (std::size_t i = 0; i < dim; ++i) {
    const double margin = 1e-6 * (upper[i] - lower[i]);
    if (result.point[i] - lower[i] <= margin ||
        upper[i] - result.point[i] <= margin) {
      result.boundary_hit = true;
    }
  }
  return result;
}

}  // namespace speclab

#endif  // SPECLAB_NELDER_MEAD_HPP
