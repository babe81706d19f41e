#include "eulersum/oracles.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "eulersum/specfun.hpp"

namespace eulersum {
namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

QuadratureResult psi_integral(double z) {
  if (!(z > 0.0)) throw std::domain_error("psi_integral: z must be > 0");
  auto f = [z](double t, double dist0, double dist1) {
    // Near t = 1 the quotient tends to z - 1; below 1e-8 the limit is
    // already accurate to ~1e-16 and avoids 0/0.
    if (dist1 < 1e-8) return z - 1.0;
    // t^(z-1) via the exact endpoint distances on both sides.
    const double log_t = (t < 0.5) ? std::log(dist0) : std::log1p(-dist1);
    return -std::expm1((z - 1.0) * log_t) / dist1;
  };
  return tanh_sinh(f, 0.0, 1.0, 1e-13, 1e-13);
}

QuadratureResult polylog_integral(int n, double z) {
  if (n < 2) throw std::domain_error("polylog_integral: order must be >= 2");
  if (std::fabs(z) > 1.0)
    throw std::domain_error("polylog_integral: |z| must be <= 1");
  double prefactor = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^(n-1)
  for (int i = 2; i <= n - 2; ++i) prefactor /= i;
  auto f = [n, z](double t, double dist0, double dist1) {
    const double log_t = (t < 0.5) ? std::log(dist0) : std::log1p(-dist1);
    // log^0 = 1 covers n = 2 uniformly.
    const double logpow = (n == 2) ? 1.0 : std::pow(log_t, n - 2);
    double log_arg;
    if (z >= 0.0) {
      const double u = (1.0 - z) + z * dist1;  // 1 - t z without cancellation
      log_arg = std::log(u);
    } else {
      log_arg = std::log1p(-t * z);
    }
    return logpow * log_arg / t;
  };
  QuadratureResult r = tanh_sinh(f, 0.0, 1.0, 1e-13, 1e-13);
  r.value *= prefactor;
  r.error_estimate *= std::fabs(prefactor);
  return r;
}

QuadratureResult polylog_recursive_integral(int n, double z) {
  if (n < 1)
    throw std::domain_error("polylog_recursive_integral: order must be >= 1");
  if (!(z > 0.0) || z > 1.0)
    throw std::domain_error("polylog_recursive_integral: z must be in (0, 1]");
  if (n == 1 && z == 1.0)
    throw std::domain_error("polylog_recursive_integral: diverges at n=1, z=1");
  auto f = [n, z](double t, double dist0, double dist1) {
    (void)dist0;
    if (n == 1) {
      // Li_0(t)/t = 1/(1-t); z < 1 keeps this away from the pole.
      return 1.0 / (1.0 - t);
    }
    if (n == 2) {
      // Li_1(t)/t = -log(1-t)/t, stable against t -> 1 via the distance.
      const double one_minus_t = (z == 1.0) ? dist1 : 1.0 - t;
      return -std::log(one_minus_t) / t;
    }
    if (t < 1e-100) return 1.0;  // Li_{n-1}(t)/t -> 1
    if (z == 1.0 && dist1 < 1e-15) {
      return zeta_int(n - 1) / t;
    }
    const double tt = (z == 1.0) ? 1.0 - dist1 : t;
    return polylog(n - 1, tt) / t;
  };
  return tanh_sinh(f, 0.0, z, 1e-13, 1e-13);
}

QuadratureResult dilog_sum_integral(double a, double b) {
  if (!(a >= 0.0) || !(b <= 1.0) || !(a < b))
    throw std::domain_error("dilog_sum_integral: need 0 <= a < b <= 1");
  auto f = [b](double t, double dist0, double dist1) {
    (void)dist0;
    // -log(1-t)/t; 1-t through the distance to b when b is the unit end.
    if (t < 0.5) return -std::log1p(-t) / t;
    const double one_minus_t = (b == 1.0) ? dist1 : 1.0 - t;
    return -std::log(one_minus_t) / t;
  };
  return tanh_sinh(f, a, b, 1e-13, 1e-13);
}

QuadratureResult logsine_integral() {
  auto f = [](double u, double dist0, double dist1) {
    (void)dist1;
    const double uu = (u < 1e-3) ? dist0 : u;
    return -4.0 * uu * std::log(2.0 * std::sin(0.5 * uu));
  };
  return tanh_sinh(f, 0.0, kPi / 3.0, 1e-13, 1e-13);
}

QuadratureResult arcsin_sq_integral() {
  auto f = [](double t, double dist0, double dist1) {
    (void)dist1;
    const double tt = (t < 1e-3) ? dist0 : t;
    const double s = std::asin(0.5 * std::sqrt(tt));
    return 4.0 * s * s / tt;
  };
  return tanh_sinh(f, 0.0, 1.0, 1e-13, 1e-13);
}

QuadratureResult clausen_from_dilog(double theta) {
  if (!(theta > 0.0) || !(theta < 2.0 * kPi))
    throw std::domain_error("clausen_from_dilog: theta must be in (0, 2 pi)");
  const std::complex<double> w(std::cos(theta), std::sin(theta));
  const std::complex<double> one_minus_w = 1.0 - w;
  const double amp = 1.0 / std::abs(one_minus_w);

  // Direct part of sum w^k / k^2.
  const long long M = 64;
  std::complex<double> direct = 0.0;
  {
    std::complex<double> wk = 1.0;
    for (long long k = 1; k < M; ++k) {
      wk *= w;
      direct += wk / (double)(k * k);
    }
  }

  // Summation by parts to third differences.  All difference quotients of
  // g(k) = 1/k^2 are exact rational expressions, so no cancellation enters:
  //   D1 g = (2k+1) / (k^2 (k+1)^2)
  //   D2 g = (6k^2 + 12k + 4) / (k^2 (k+1)^2 (k+2)^2)
  //   D3 g = (24k^3 + 108k^2 + 132k + 36) / (k^2 ... (k+3)^2)
  auto d3v = [](double k) {
    const double num = ((24.0 * k + 108.0) * k + 132.0) * k + 36.0;
    double den = k * k;
    den *= (k + 1.0) * (k + 1.0);
    den *= (k + 2.0) * (k + 2.0);
    den *= (k + 3.0) * (k + 3.0);
    return num / den;
  };

  const double a3 = amp * amp * amp;
  std::complex<double> s3 = 0.0;
  std::complex<double> wk = std::pow(w, (double)M) / w;
  long long k = M;
  long long used = M;
  for (;; ++k, ++used) {
    wk *= w;
    const double g3 = d3v((double)k);
    s3 += wk * g3;
    if (g3 * a3 < 1e-17) break;
    if (k > 3000000)
      break;  // truncation folded into the error estimate below
  }
  const double trunc_bound = d3v((double)k) * (double)k / 4.0 * a3;

  auto d2v = [](double k) {
    const double num = (6.0 * k + 12.0) * k + 4.0;
    double den = k * k;
    den *= (k + 1.0) * (k + 1.0);
    den *= (k + 2.0) * (k + 2.0);
    return num / den;
  };
  auto d1v = [](double k) {
    return (2.0 * k + 1.0) / (k * k * (k + 1.0) * (k + 1.0));
  };

  const std::complex<double> wM = std::pow(w, (double)M);
  const std::complex<double> front = wM / one_minus_w;
  const std::complex<double> ratio = w / one_minus_w;
  const std::complex<double> s2 = front * d2v((double)M) - ratio * s3;
  const std::complex<double> s1 = front * d1v((double)M) - ratio * s2;
  const std::complex<double> s0 =
      front * (1.0 / ((double)M * (double)M)) - ratio * s1;

  QuadratureResult r;
  r.value = std::imag(direct + s0);
  r.error_estimate = trunc_bound + 64.0 * 2.220446049250313e-16;
  r.evaluations = used;
  return r;
}

}  // namespace eulersum
