#ifndef SPECLAB_QUADRATURE_HPP
#define SPECLAB_QUADRATURE_HPP

#include <functional>

namespace speclab {

// Thin wrappers over GSL's adaptive integrators. All of them throw
// speclab::numerical_error (with the achieved tolerance attached) when the
// requested tolerance cannot be met.

// Adaptive integration on [a, b]; copes with integrable endpoint
// singularities (QAGS).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double epsabs = 0.0, double epsrel = 1e-10);

// Adaptive integration on [a, +inf) for absolutely integrable f (QAGIU).
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double epsabs = 0.0, double epsrel = 1e-10);

// Fourier cosine integral \int_a^inf f(x) cos(omega x) dx for decaying f,
// omega > 0 (QAWF with cycle acceleration). Tolerance is absolute.
double fourier_cos_tail(const std::function<double(double)>& f, double a,
                        double omega, double epsabs);

}  // namespace speclab

#endif  // SPECLAB_QUADRATURE_HPP
