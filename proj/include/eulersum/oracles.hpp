#pragma once

#include "eulersum/quadrature.hpp"

namespace eulersum {

// Independent integral-representation evaluators.  Each one shares no
// series machinery with the function it checks, so agreement is a real
// consistency test rather than a tautology.

// gamma + psi(z) = int_0^1 (1 - t^(z-1)) / (1 - t) dt, z > 0.
QuadratureResult psi_integral(double z);

// Li_n(z) = (-1)^(n-1)/(n-2)! * int_0^1 log^(n-2)(t) log(1 - t z) / t dt,
// n >= 2, |z| <= 1.
QuadratureResult polylog_integral(int n, double z);

// Li_n(z) = int_0^z Li_(n-1)(t) / t dt, n >= 1, z in (0, 1]; (n=1, z=1)
// diverges and is rejected.
QuadratureResult polylog_recursive_integral(int n, double z);

// -int_a^b log(1-t)/t dt; the full interval [0, 1] gives zeta(2).
QuadratureResult dilog_sum_integral(double a = 0.0, double b = 1.0);

// -4 int_0^{pi/3} u log(2 sin(u/2)) du (log-sine form).
QuadratureResult logsine_integral();

// 4 int_0^1 arcsin^2(sqrt(t)/2) / t dt (same value as the log-sine form).
QuadratureResult arcsin_sq_integral();

// Cl2(theta) as Im Li2(e^{i theta}) for theta in (0, 2 pi), evaluated by
// boundary-accelerated summation of the unit-circle series (summation by
// parts to third differences); independent of the clausen2 implementation.
QuadratureResult clausen_from_dilog(double theta);

}  // namespace eulersum
