#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

namespace eulersum {

// Cutoffs shared by the summation strategies.  The defaults are sized so
// every catalog entry meets its tolerance; they can be overridden per call
// or globally (the CLI does the latter at startup).
struct SumConfig {
  long long direct_cutoff = 1000000;  // terms for monotone 1-D sums
  long long pair_cutoff = 500000;     // pairs for alternating 1-D sums
  long long term_budget = 10000000;   // hard cap before NoConvergence
  long long outer_cutoff = 10000;     // rows for 2-D sums
  long long inner_cutoff = 2000;      // terms per row before the inner tail
};
SumConfig& sum_config();  // process-wide default, written before any runs

struct TailEstimate {
  double value = 0.0;
  double error = 0.0;
};

// Decay classes.  The term function of a summand must accept real arguments
// (not just integers) so that truncation tails can be formed by
// Euler-Maclaurin correction with numeric quadrature; no per-series tail
// formula is required.
struct PolyLogDecay {};  // |a_n| ~ log^q(n) / n^p, p >= 2

struct AlternatingDecay {
  // Smooth magnitude, defined for real x >= start; the engine synthesizes
  // signs, pairs consecutive terms, and treats the pair sum as a monotone
  // series.
  std::function<double(double)> magnitude;
  int first_sign = 1;  // sign of the term at n = start
};

struct ExponentialDecay {};  // |a_n| ~ r^n, r < 1

struct CustomTail {
  // Closed-form tail: value and error of sum_{n > N} a_n as a function of N.
  std::function<TailEstimate(double)> tail;
};

using TailClass =
    std::variant<PolyLogDecay, AlternatingDecay, ExponentialDecay, CustomTail>;

struct Summand1D {
  std::function<double(double)> term;
  long long start = 1;
  TailClass tail = PolyLogDecay{};
};

struct SumResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long long terms_used = 0;
  std::string strategy;
};

// Primary evaluation: direct summation to a cutoff plus a tail estimate
// appropriate for the decay class.  Throws NoConvergence when the target
// cannot be met within the term budget.
SumResult sum_1d(const Summand1D& s, double target_abs_err,
                 const SumConfig& cfg = sum_config());

// Structurally different second route (series acceleration or
// log-Richardson extrapolation); used to cross-check sum_1d.
SumResult sum_1d_crosscheck(const Summand1D& s,
                            const SumConfig& cfg = sum_config());

// sum_{n>=1} 1/((n+a)(n+b)) = (psi(1+b) - psi(1+a)) / (b - a) for a != b,
// with the trigamma limit on the diagonal.  Requires a, b >= 0.
double lemma_partial_fraction(double a, double b);

// Gamma(k) / Gamma(1+2k) evaluated in log space, k >= 1.
double lemma_gamma_ratio(int k);

struct Summand2D {
  std::function<double(double n, double k)> term;
  long long inner_start = 1;  // n
  long long outer_start = 1;  // k
  // Exact inner reduction to a 1-D summand, when one exists.
  std::optional<Summand1D> reduction;
};

// Reduced route when available, otherwise row-by-row summation with inner
// Euler-Maclaurin tails and an outer tail over the row-sum function.
SumResult sum_2d(const Summand2D& s, double target_abs_err,
                 const SumConfig& cfg = sum_config());

// Closed-form truncation tails sum_{n > N} f(n) for the common integrand
// shapes; each is an Euler-Maclaurin expansion at M = N + 1 with the first
// dropped term folded into the error.
namespace tails {
double inv_square(double N);      // f = 1/n^2   (exactly trigamma(N+1))
double inv_cube(double N);        // f = 1/n^3
double log_over_square(double N); // f = log n / n^2
double log_over_cube(double N);   // f = log n / n^3
double log2_over_square(double N);// f = log^2 n / n^2
}  // namespace tails

}  // namespace eulersum
