#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "eulersum/specfun.hpp"

using namespace eulersum;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2 = 0.6931471805599453;
}  // namespace

TEST_CASE("euler gamma digits") {
  CHECK(euler_gamma() == doctest::Approx(0.5772156649015329).epsilon(1e-15));
}

TEST_CASE("digamma at classical points") {
  CHECK(digamma(1.0) == doctest::Approx(-euler_gamma()).epsilon(1e-14));
  CHECK(digamma(0.5) ==
        doctest::Approx(-euler_gamma() - 2.0 * kLog2).epsilon(1e-14));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - euler_gamma()).epsilon(1e-14));
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(digamma(-2.5), std::domain_error);
}

TEST_CASE("trigamma at classical points") {
  CHECK(trigamma(1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-14));
  CHECK(trigamma(0.5) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-14));
  CHECK(trigamma(2.0) == doctest::Approx(kPi * kPi / 6.0 - 1.0).epsilon(1e-14));
  CHECK_THROWS_AS(trigamma(0.0), std::domain_error);
}

TEST_CASE("psi recurrences at random arguments") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> dist(0.01, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng);
    const double scale = 1.0 + std::fabs(digamma(x)) + 1.0 / x;
    CHECK(std::fabs(digamma(x + 1.0) - digamma(x) - 1.0 / x) <=
          1e-12 * scale);
    const double scale2 = trigamma(x) + 1.0 / (x * x);
    CHECK(std::fabs(trigamma(x + 1.0) - trigamma(x) + 1.0 / (x * x)) <=
          1e-12 * scale2);
  }
}

TEST_CASE("digamma reflection") {
  for (int i = 1; i <= 17; ++i) {
    const double x = i / 18.0;
    CHECK(digamma(1.0 - x) - digamma(x) ==
          doctest::Approx(kPi / std::tan(kPi * x)).epsilon(1e-11));
  }
}

TEST_CASE("zeta at even orders matches pi powers") {
  CHECK(zeta_int(2) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
  CHECK(zeta_int(4) == doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-15));
  CHECK(zeta_int(6) == doctest::Approx(std::pow(kPi, 6) / 945.0).epsilon(1e-15));
  CHECK(zeta_int(12) ==
        doctest::Approx(691.0 * std::pow(kPi, 12) / 638512875.0).epsilon(1e-14));
}

TEST_CASE("zeta odd and large orders") {
  CHECK(zeta_int(3) == doctest::Approx(1.2020569031595943).epsilon(1e-15));
  CHECK(zeta_int(5) == doctest::Approx(1.0369277551433699).epsilon(1e-15));
  CHECK(zeta_int(50) ==
        doctest::Approx(1.0 + std::pow(2.0, -50.0)).epsilon(1e-15));
  CHECK_THROWS_AS(zeta_int(1), std::domain_error);
}

TEST_CASE("dilog and trilog special values") {
  CHECK(polylog(2, 1.0) == doctest::Approx(zeta_int(2)).epsilon(1e-15));
  CHECK(polylog(2, -1.0) ==
        doctest::Approx(-kPi * kPi / 12.0).epsilon(1e-15));
  CHECK(polylog(3, 1.0) == doctest::Approx(zeta_int(3)).epsilon(1e-15));
  CHECK(polylog(3, -1.0) ==
        doctest::Approx(-0.75 * zeta_int(3)).epsilon(1e-15));
  CHECK(polylog(2, 0.5) ==
        doctest::Approx(kPi * kPi / 12.0 - 0.5 * kLog2 * kLog2).epsilon(1e-14));
  CHECK(polylog(3, 0.5) ==
        doctest::Approx(7.0 * zeta_int(3) / 8.0 -
                        kPi * kPi * kLog2 / 12.0 +
                        kLog2 * kLog2 * kLog2 / 6.0)
            .epsilon(1e-14));
  CHECK(polylog(4, 0.5) == doctest::Approx(0.5174790616738994).epsilon(1e-14));
  CHECK_THROWS_AS(polylog(1, 1.0), std::domain_error);
  CHECK_THROWS_AS(polylog(2, 1.5), std::domain_error);
}

TEST_CASE("polylog square relation across branches") {
  for (int n = 2; n <= 4; ++n) {
    for (double z = 0.05; z < 0.999; z += 0.05) {
      const double lhs = polylog(n, z) + polylog(n, -z);
      const double rhs = std::pow(2.0, 1 - n) * polylog(n, z * z);
      CHECK(std::fabs(lhs - rhs) <= 1e-14 * (1.0 + std::fabs(lhs)));
    }
  }
}

TEST_CASE("dilog reflection crosses the series split") {
  for (double z : {0.999, 0.9, 0.6}) {
    const double lhs = polylog(2, z) + polylog(2, 1.0 - z);
    const double rhs = zeta_int(2) - std::log(z) * std::log(1.0 - z);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("clausen oddness and periodicity") {
  for (int i = 1; i <= 60; ++i) {
    const double theta = i * 0.2;
    CHECK(std::fabs(clausen2(-theta) + clausen2(theta)) <= 1e-13);
    CHECK(std::fabs(clausen2(theta + 2.0 * kPi) - clausen2(theta)) <= 1e-13);
  }
}

TEST_CASE("clausen duplication") {
  for (int i = 1; i < 40; ++i) {
    const double theta = i * kPi / 40.0;
    const double lhs = clausen2(2.0 * theta);
    const double rhs = 2.0 * clausen2(theta) - 2.0 * clausen2(kPi - theta);
    CHECK(std::fabs(lhs - rhs) <= 1e-13);
  }
}

TEST_CASE("clausen landmark values") {
  CHECK(clausen2(kPi / 2.0) == doctest::Approx(catalan()).epsilon(1e-14));
  CHECK(clausen2(kPi / 3.0) ==
        doctest::Approx(1.0149416064096536).epsilon(1e-14));
  CHECK(clausen2(kPi) == doctest::Approx(0.0));
  CHECK(clausen2(0.0) == doctest::Approx(0.0));
}

TEST_CASE("catalan digits") {
  CHECK(catalan() == doctest::Approx(0.9159655941772190).epsilon(1e-15));
}

TEST_CASE("log gamma against the standard library") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.25, 11.0, 40.0, 123.456, 1e4}) {
    CHECK(log_gamma_pos(x) ==
          doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(log_gamma_pos(0.0), std::domain_error);
}

TEST_CASE("gamma ratio stays exact where gamma overflows") {
  CHECK(gamma_ratio_log(3.5, 7.25) ==
        doctest::Approx(std::lgamma(3.5) - std::lgamma(7.25)).epsilon(1e-13));
  // Gamma(x)/Gamma(x+1) = 1/x, far beyond where Gamma itself is finite.
  CHECK(gamma_ratio_log(1e8, 1e8 + 1.0) ==
        doctest::Approx(-std::log(1e8)).epsilon(1e-12));
  CHECK(gamma_ratio_log(2e6, 1e6) ==
        doctest::Approx(std::lgamma(2e6) - std::lgamma(1e6)).epsilon(1e-10));
}

TEST_CASE("complex log gamma basics") {
  const std::complex<double> z(1.0, 1.0);
  // |Gamma(1+i)|^2 = pi / sinh(pi)
  CHECK(std::exp(2.0 * log_gamma_complex(z).real()) ==
        doctest::Approx(kPi / std::sinh(kPi)).epsilon(1e-13));
  // Real axis agrees with the real implementation.
  for (double x : {0.5, 1.0, 3.25, 9.5}) {
    const auto lg = log_gamma_complex({x, 0.0});
    CHECK(lg.real() == doctest::Approx(log_gamma_pos(x)).epsilon(1e-13));
    CHECK(std::fabs(lg.imag()) <= 1e-13);
  }
  // Conjugation symmetry.
  for (double t : {0.3, 2.0, 17.5}) {
    const auto a = log_gamma_complex({1.25, t});
    const auto b = log_gamma_complex({1.25, -t});
    CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-13));
    CHECK(a.imag() == doctest::Approx(-b.imag()).epsilon(1e-13));
  }
  // Gamma(z+1) = z Gamma(z), checked multiplicatively so branches drop out.
  for (double t : {0.7, 5.0, 42.0}) {
    const std::complex<double> w(0.8, t);
    const auto delta =
        log_gamma_complex(w + 1.0) - log_gamma_complex(w) - std::log(w);
    CHECK(std::abs(std::exp(delta) - 1.0) <= 1e-12);
  }
}
