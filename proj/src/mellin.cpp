#include "eulersum/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "eulersum/errors.hpp"
#include "eulersum/quadrature.hpp"
#include "eulersum/specfun.hpp"

namespace eulersum {
namespace {

constexpr double kPi = 3.14159265358979323846;

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void check_spec(const ContourSpec& spec) {
  if (!(spec.abscissa > 0.0) || !(spec.height > 0.0) || spec.nodes < 32)
    throw ValidityViolation(
        "contour spec needs abscissa > 0, height > 0, nodes >= 32");
}

}  // namespace

double mellin_forward_example(int k, double z) {
  if (k < 0) throw std::domain_error("mellin_forward_example: k >= 0 required");
  if (!(z > 0.0))
    throw std::domain_error("mellin_forward_example: z > 0 required");
  // x = e^u turns the integrand into u^k e^{-z u} on u >= 0.  Cut where the
  // integrand drops below e^{-80} relative to its scale.
  double cut = 80.0 / z;
  for (int pass = 0; pass < 4; ++pass)
    cut = (80.0 + k * std::log(std::max(cut, 2.0))) / z;
  const int panels = std::max(32, (int)std::ceil(cut));
  auto f = [k, z](double u) { return std::pow(u, (double)k) * std::exp(-z * u); };
  return gauss_legendre_panels(f, 0.0, cut, panels);
}

double inverse_mellin_example(int k, double x, const ContourSpec& spec,
                              double tol) {
  if (k < 0) throw std::domain_error("inverse_mellin_example: k >= 0 required");
  if (!(x > 1.0))
    throw std::domain_error("inverse_mellin_example: x > 1 required");
  check_spec(spec);

  const double c = spec.abscissa;
  const double T = spec.height;
  const double L = std::log(x);
  const double kf = factorial(k);
  const double xc = std::pow(x, c);

  // Residual after two endpoint corrections; see below.
  const double resid = xc * kf * (k + 1) / (kPi * L * L * std::pow(T, k + 2));
  if (resid > tol)
    throw TruncationTooSmall(
        "inverse_mellin_example: contour too short for the requested "
        "tolerance",
        resid);

  // Conjugate symmetry folds the contour onto t in [0, T].
  auto f = [&](double t) {
    const std::complex<double> zc(c, t);
    return std::exp(zc * L) * kf * std::pow(zc, -(double)(k + 1));
  };
  const int panels =
      std::max(spec.nodes / 16, (int)std::ceil(T * L / (2.0 * kPi)) + 4);
  const std::complex<double> body =
      gauss_legendre_panels_complex(f, 0.0, T, panels);

  // Two integrations by parts against e^{itL} push the cut tail down to
  // O(1/T^{k+3}); the boundary terms are added back explicitly.
  const std::complex<double> iL(0.0, L);
  const std::complex<double> zT(c, T);
  const std::complex<double> phase = std::exp(std::complex<double>(0.0, T * L));
  const std::complex<double> g = xc * kf * std::pow(zT, -(double)(k + 1));
  const std::complex<double> gp = xc * kf * (-(double)(k + 1)) *
                                  std::complex<double>(0.0, 1.0) *
                                  std::pow(zT, -(double)(k + 2));
  const std::complex<double> corr = phase * (-g / iL + gp / (iL * iL));

  return (body.real() + corr.real()) / kPi;
}

FactorizationResult factorization_check(std::complex<double> a1,
                                        std::complex<double> a2,
                                        std::complex<double> a3, double p,
                                        double c1, double c2,
                                        const ContourSpec& spec) {
  if (!(a1.imag() > 0.0) || !(a2.imag() > 0.0) || !(a3.imag() > 0.0))
    throw ValidityViolation("factorization_check: Im a_i > 0 required");
  if (!(c1 > 0.0) || !(c2 > 0.0) || !(p - c1 - c2 > 0.0))
    throw ValidityViolation(
        "factorization_check: c1 > 0, c2 > 0, p - c1 - c2 > 0 required");
  check_spec(spec);

  const double T = spec.height;
  int n = spec.nodes;
  if (n & 1) ++n;  // even, so the half-resolution grid reuses the same nodes
  const double h = 2.0 * T / n;
  const double q = p - c1 - c2;

  const std::complex<double> la1 = std::log(a1);
  const std::complex<double> la2 = std::log(a2);
  const std::complex<double> la3 = std::log(a3);

  // Axis caches.  The third gamma factor depends only on t1 + t2, which on a
  // uniform grid is again a uniform grid, so it is cached per anti-diagonal.
  std::vector<std::complex<double>> e1(n + 1), e2(n + 1), w3(2 * n + 1);
  for (int i = 0; i <= n; ++i) {
    const double t = -T + i * h;
    const std::complex<double> z1(c1, t);
    const std::complex<double> z2(c2, t);
    e1[i] = std::exp(log_gamma_complex(z1) - z1 * la1);
    e2[i] = std::exp(log_gamma_complex(z2) - z2 * la2);
  }
  for (int m = 0; m <= 2 * n; ++m) {
    const double u = -2.0 * T + m * h;
    const std::complex<double> z3(q, -u);
    w3[m] = std::exp(log_gamma_complex(z3) - z3 * la3);
  }

  auto grid_total = [&](int stride) {
    const double hh = h * stride;
    const int nn = n / stride;
    std::complex<double> acc(0.0, 0.0);
    for (int i = 0; i <= nn; ++i) {
      const double wi = (i == 0 || i == nn) ? 0.5 : 1.0;
      const std::complex<double> left = wi * e1[i * stride];
      std::complex<double> row(0.0, 0.0);
      for (int j = 0; j <= nn; ++j) {
        const double wj = (j == 0 || j == nn) ? 0.5 : 1.0;
        row += wj * e2[j * stride] * w3[(i + j) * stride];
      }
      acc += left * row;
    }
    return acc * (hh * hh);
  };

  const double gp = std::exp(log_gamma_pos(p));
  const double norm = 4.0 * kPi * kPi * gp;
  const std::complex<double> rhs = grid_total(1) / norm;
  const std::complex<double> rhs_half = grid_total(2) / norm;
  const std::complex<double> lhs = std::exp(-p * std::log(a1 + a2 + a3));

  // The log-magnitude of the integrand is positively homogeneous and concave
  // in (t1, t2), so its worst directional decay rate is attained on one of
  // the six rays where an absolute value switches sign.
  const double g1 = std::arg(a1), g2 = std::arg(a2), g3 = std::arg(a3);
  const double rate = std::min({kPi - g1 + g3, kPi + g1 - g3, kPi - g2 + g3,
                                kPi + g2 - g3, (kPi - g1 + g2) / std::sqrt(2.0),
                                (kPi + g1 - g2) / std::sqrt(2.0)});
  const double pref = std::pow(std::abs(a1), -c1) * std::pow(std::abs(a2), -c2) *
                      std::pow(std::abs(a3), -q) * 30.0;
  const double tail = pref * std::pow(T, std::max(p - 0.5, 0.5)) *
                      std::exp(-rate * T) * (2.0 / rate) * T / (2.0 * kPi * gp);
  if (tail > 1e-4)
    throw TruncationTooSmall("factorization_check: contour box too small",
                             tail);

  FactorizationResult out;
  out.lhs = lhs;
  out.rhs = rhs;
  out.abs_diff = std::abs(lhs - rhs);
  out.tail_bound = tail;
  out.refinement_delta = std::abs(rhs - rhs_half);
  return out;
}

}  // namespace eulersum
