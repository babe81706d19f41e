#pragma once

#include <complex>

namespace eulersum {

// Vertical-line contour Re z = abscissa, truncated at |Im z| = height, with
// a total quadrature node budget.
struct ContourSpec {
  double abscissa = 1.0;
  double height = 60.0;
  int nodes = 2000;
};

// Transform of the cut power-log kernel: integral over x >= 1 of
// x^(-z-1) log^k x, evaluated by quadrature.  Equals k!/z^(k+1); callers
// compare against that.  Throws std::domain_error for z <= 0 or k < 0.
double mellin_forward_example(int k, double z);

// Inversion of k!/z^(k+1) along the truncated contour, with endpoint
// corrections from two integrations by parts.  Returns the real part, which
// recovers log^k x for x > 1.  Throws TruncationTooSmall when the residual
// bound after the corrections still exceeds tol.
double inverse_mellin_example(int k, double x, const ContourSpec& spec,
                              double tol = 1e-4);

struct FactorizationResult {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double abs_diff;          // |lhs - rhs|
  double tail_bound;        // a-priori bound on the discarded contour tail
  double refinement_delta;  // |rhs - rhs at half resolution|
};

// Splits (a1+a2+a3)^(-p) into a double contour integral of gamma factors
// against principal-branch powers of the a_i, and evaluates both sides.
// Requires Im a_i > 0, c1 > 0, c2 > 0, p - c1 - c2 > 0 (ValidityViolation
// otherwise); throws TruncationTooSmall when the contour box cannot meet a
// 1e-3 budget.
FactorizationResult factorization_check(std::complex<double> a1,
                                        std::complex<double> a2,
                                        std::complex<double> a3, double p,
                                        double c1, double c2,
                                        const ContourSpec& spec);

}  // namespace eulersum
