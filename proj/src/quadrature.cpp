#include "speclab/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <string>

#include "speclab/errors.hpp"

namespace speclab {

namespace {

constexpr std::size_t kLimit = 4096;

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const {
    gsl_integration_workspace_free(w);
  }
};
using Workspace =
    std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter>;

Workspace make_workspace() {
  return Workspace(gsl_integration_workspace_alloc(kLimit));
}

double call_trampoline(double x, void* params) {
  const auto* fn = static_cast<const std::function<double(double)>*>(params);
  return (*fn)(x);
}

void disable_gsl_abort() {
  static const bool done = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)done;
}

[[noreturn]] void raise(const char* routine, int status, double abserr,
                        double value) {
  const double rel =
      std::abs(value) > 0.0 ? abserr / std::abs(value) : abserr;
  throw numerical_error(std::string(routine) + " failed: " +
                            gsl_strerror(status) +
                            " (achieved abs err " + std::to_string(abserr) +
                            ")",
                        rel);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double epsabs, double epsrel) {
  disable_gsl_abort();
  auto ws = make_workspace();
  gsl_function gf{&call_trampoline, const_cast<void*>(static_cast<const void*>(&f))};
  double result = 0.0;
  double abserr = 0.0;
  const int status = gsl_integration_qags(&gf, a, b, epsabs, epsrel, kLimit,
                                          ws.get(), &result, &abserr);
  if (status != GSL_SUCCESS) raise("qags", status, abserr, result);
  return result;
}

double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double epsabs, double epsrel) {
  disable_gsl_abort();
  auto ws = make_workspace();
  gsl_function gf{&call_trampoline, const_cast<void*>(static_cast<const void*>(&f))};
  double result = 0.0;
  double abserr = 0.0;
  const int status = gsl_integration_qagiu(&gf, a, epsabs, epsrel, kLimit,
                                           ws.get(), &result, &abserr);
  if (status != GSL_SUCCESS) raise("qagiu", status, abserr, result);
  return result;
}

double fourier_cos_tail(const std::function<double(double)>& f, double a,
                        double omega, double epsabs) {
  disable_gsl_abort();
  auto ws = make_workspace();
  auto cycle_ws = make_workspace();
  gsl_integration_qawo_table* table =
      gsl_integration_qawo_table_alloc(omega, 1.0, GSL_INTEG_COSINE, 48);
  if (!table) throw numerical_error("qawo table allocation failed");
  gsl_function gf{&call_trampoline, const_cast<void*>(static_cast<const void*>(&f))};
  double result = 0.0;
  double abserr = 0.0;
  const int status =
      gsl_integration_qawf(&gf, a, epsabs, kLimit, ws.get(), cycle_ws.get(),
                           table, &result, &abserr);
  gsl_integration_qawo_table_free(table);
  if (status != GSL_SUCCESS) raise("qawf", status, abserr, result);
  return result;
}

}  // namespace speclab
