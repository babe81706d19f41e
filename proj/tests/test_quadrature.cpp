#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "eulersum/quadrature.hpp"

using namespace eulersum;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("tanh sinh on smooth integrands") {
  auto sine = [](double x, double, double) { return std::sin(x); };
  const auto r = tanh_sinh(sine, 0.0, kPi);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.evaluations < 4000);

  auto gauss = [](double x, double, double) { return std::exp(-x * x); };
  CHECK(tanh_sinh(gauss, -3.0, 3.0).value ==
        doctest::Approx(std::sqrt(kPi) * std::erf(3.0)).epsilon(1e-13));
}

TEST_CASE("tanh sinh endpoint singularities") {
  // Distances from the endpoints arrive exactly, so these evaluate cleanly.
  auto inv_sqrt = [](double, double da, double) { return 1.0 / std::sqrt(da); };
  CHECK(tanh_sinh(inv_sqrt, 0.0, 1.0).value ==
        doctest::Approx(2.0).epsilon(1e-13));

  auto logt = [](double, double da, double) { return std::log(da); };
  CHECK(tanh_sinh(logt, 0.0, 1.0).value == doctest::Approx(-1.0).epsilon(1e-13));

  auto log1m = [](double, double, double db) { return -std::log(db); };
  CHECK(tanh_sinh(log1m, 0.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-13));

  // The strongest algebraic singularity the oracles produce; the node
  // window has to reach deep enough that the unsampled mass is negligible.
  auto steep = [](double, double da, double) { return std::pow(da, -0.9); };
  CHECK(tanh_sinh(steep, 0.0, 1.0).value == doctest::Approx(10.0).epsilon(1e-11));
}

TEST_CASE("tanh sinh error estimate brackets the defect") {
  auto f = [](double x, double, double) { return std::cos(3.0 * x); };
  const auto r = tanh_sinh(f, 0.0, 2.0);
  const double truth = std::sin(6.0) / 3.0;
  CHECK(std::fabs(r.value - truth) <= 50.0 * r.error_estimate + 1e-15);
}

TEST_CASE("tanh sinh rejects empty intervals") {
  auto f = [](double, double, double) { return 1.0; };
  CHECK_THROWS_AS(tanh_sinh(f, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(tanh_sinh(f, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("gauss legendre panels") {
  auto p20 = [](double x) { return std::pow(x, 20); };
  CHECK(gauss_legendre_panels(p20, 0.0, 1.0, 1) ==
        doctest::Approx(1.0 / 21.0).epsilon(1e-15));

  auto sin2 = [](double x) { return std::sin(x) * std::sin(x); };
  CHECK(gauss_legendre_panels(sin2, 0.0, 2.0 * kPi, 8) ==
        doctest::Approx(kPi).epsilon(1e-14));

  CHECK_THROWS_AS(gauss_legendre_panels(p20, 0.0, 1.0, 0),
                  std::invalid_argument);
}

TEST_CASE("gauss legendre complex panels") {
  auto osc = [](double t) {
    return std::exp(std::complex<double>(0.0, t));
  };
  const auto v = gauss_legendre_panels_complex(osc, 0.0, 1.0, 4);
  const std::complex<double> truth =
      (std::exp(std::complex<double>(0.0, 1.0)) - 1.0) /
      std::complex<double>(0.0, 1.0);
  CHECK(std::abs(v - truth) <= 1e-14);
}
