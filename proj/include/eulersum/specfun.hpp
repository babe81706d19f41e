#pragma once

#include <complex>

namespace eulersum {

// Euler-Mascheroni constant, computed once at first use.
double euler_gamma();

// psi(x) for x > 0.  Throws std::domain_error otherwise.
double digamma(double x);

// psi'(x) for x > 0.
double trigamma(double x);

// zeta(m) for integer m >= 2.
double zeta_int(int m);

// Li_n(z) for integer n >= 1 and real z with |z| <= 1, excluding (n=1, z=1).
double polylog(int n, double z);

// Clausen function Cl2(theta) for any finite real theta.
double clausen2(double theta);

// Catalan's constant, computed once at first use.
double catalan();

// log(Gamma(a)/Gamma(b)) for a, b > 0, stable for arguments up to 1e6 and
// beyond (no intermediate Gamma overflow).
double gamma_ratio_log(double a, double b);

// log Gamma(x) for real x > 0.
double log_gamma_pos(double x);

// Principal branch of log Gamma(z) for Re z > 0.
std::complex<double> log_gamma_complex(std::complex<double> z);

}  // namespace eulersum
