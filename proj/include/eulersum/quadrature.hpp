#pragma once

#include <complex>
#include <functional>

namespace eulersum {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long long evaluations = 0;
};

// Integrands receive the node location together with its exact distances to
// both endpoints.  Near an endpoint the distance is far more accurate than
// x - a or b - x, which is what makes log and algebraic endpoint
// singularities integrable at full precision.
using EndpointAwareIntegrand =
    std::function<double(double x, double dist_a, double dist_b)>;

// Double-exponential (tanh-sinh) quadrature on a finite interval.  Handles
// integrable endpoint singularities; levels are refined until two successive
// passes agree to tolerance.  Non-finite integrand values are treated as
// zero so that underflow at extreme nodes cannot poison the sum.
QuadratureResult tanh_sinh(const EndpointAwareIntegrand& f, double a, double b,
                           double abs_tol = 1e-12, double rel_tol = 1e-12,
                           int max_level = 10);

// Composite 16-point Gauss-Legendre on [a, b] split into equal panels.
// Intended for smooth (often oscillatory) integrands with a known frequency,
// where the caller picks the panel count.
double gauss_legendre_panels(const std::function<double(double)>& f, double a,
                             double b, int panels);
std::complex<double> gauss_legendre_panels_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int panels);

}  // namespace eulersum
