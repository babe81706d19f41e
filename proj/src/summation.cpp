#include "eulersum/summation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eulersum/errors.hpp"
#include "eulersum/quadrature.hpp"
#include "eulersum/specfun.hpp"

namespace eulersum {
namespace {

// Neumaier-compensated accumulator; also tracks sum of |x| so callers can
// bound accumulated rounding by 4 eps sum|x|.
struct Accum {
  double s = 0.0, c = 0.0, abs = 0.0;
  void add(double x) {
    abs += std::fabs(x);
    const double t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double sum() const { return s + c; }
};

constexpr double kEps = 2.220446049250313e-16;

// Euler-Maclaurin truncation tail sum_{n > N} f(n) for smooth monotone-ish
// decaying f, using numeric quadrature for the integral piece:
//   T = int_M^inf f + f(M)/2 - f'(M)/12,  M = N + 1,
// with f' by central difference and the first dropped correction (~f'''/720)
// folded into the error bound.  The integral maps to (0, 1] via x = M/u;
// the association (f(x)*x)*x/M keeps every intermediate in range even at
// the extreme quadrature nodes.
TailEstimate em_tail(const std::function<double(double)>& f, double N,
                     double quad_abs_tol, long long* evals) {
  const double M = N + 1.0;
  auto g = [&](double u, double da, double db) {
    (void)da;
    (void)db;
    const double x = M / u;
    return (f(x) * x) * (x / M);
  };
  const QuadratureResult q =
      tanh_sinh(g, 0.0, 1.0, std::fmax(quad_abs_tol, 1e-16), 1e-11);
  const double f_m = f(M);
  const double fp = f(M + 0.5) - f(M - 0.5);
  const double f3 =
      f(M + 1.5) - 3.0 * f(M + 0.5) + 3.0 * f(M - 0.5) - f(M - 1.5);
  if (evals) *evals += q.evaluations + 5;
  TailEstimate t;
  t.value = q.value + 0.5 * f_m - fp / 12.0;
  // |f'''|/100 covers both the dropped E-M term and the f' difference bias.
  t.error = q.error_estimate + std::fabs(f3) / 100.0 +
            kEps * (std::fabs(q.value) + std::fabs(f_m));
  return t;
}

SumResult direct_plus_tail(const Summand1D& s, long long cutoff,
                           const std::function<TailEstimate(double)>& tail_fn,
                           const char* strategy) {
  Accum acc;
  const long long last = s.start + cutoff - 1;
  for (long long n = s.start; n <= last; ++n) acc.add(s.term((double)n));
  const TailEstimate t = tail_fn((double)last);
  SumResult r;
  r.value = acc.sum() + t.value;
  r.error_estimate = t.error + 4.0 * kEps * acc.abs + kEps * std::fabs(r.value);
  r.terms_used = cutoff;
  r.strategy = strategy;
  return r;
}

SumResult sum_alternating(const Summand1D& s, const AlternatingDecay& alt,
                          long long pairs, double target, long long* evals) {
  Accum acc;
  const long long n0 = s.start;
  for (long long n = n0; n < n0 + 2 * pairs; ++n) acc.add(s.term((double)n));
  // m-th pair (m >= 1) covers n = n0+2m-2 and n0+2m-1; its sum continues to
  // real m through the magnitude function.
  const double sign0 = (double)alt.first_sign;
  auto pair_fn = [&](double m) {
    return sign0 *
           (alt.magnitude(n0 + 2.0 * m - 2.0) - alt.magnitude(n0 + 2.0 * m - 1.0));
  };
  *evals += 2 * pairs;
  const TailEstimate t = em_tail(pair_fn, (double)pairs, target * 0.1, evals);
  SumResult r;
  r.value = acc.sum() + t.value;
  r.error_estimate = t.error + 4.0 * kEps * acc.abs + kEps * std::fabs(r.value);
  r.terms_used = *evals;
  r.strategy = "paired-euler-maclaurin";
  return r;
}

// Alternating-series acceleration (Cohen, Rodriguez Villegas, Zagier):
// evaluates sum_{j>=0} (-1)^j a(j) from n leading terms with error
// shrinking like (3+sqrt 8)^-n.
double cvz_accelerate(const std::function<double(double)>& a, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0, c = -d, s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a((double)k);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

// Solve a small linear system in long double with partial pivoting.
void solve_inplace(int n, long double A[][6], long double* x) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs((double)A[r][col]) > std::fabs((double)A[piv][col])) piv = r;
    for (int c = col; c <= n; ++c) std::swap(A[piv][c], A[col][c]);
    for (int r = col + 1; r < n; ++r) {
      const long double f = A[r][col] / A[col][col];
      for (int c = col; c <= n; ++c) A[r][c] -= f * A[col][c];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    long double v = A[r][n];
    for (int c = r + 1; c < n; ++c) v -= A[r][c] * x[c];
    x[r] = v / A[r][r];
  }
}

// Extrapolation against the model
//   S(M) = S_inf - (a1 log M + a0)/M - (b1 log M + b0)/M^2
// fitted at five geometric cutoffs; a four-parameter refit on the largest
// four cutoffs provides the error estimate.
SumResult richardson_log(const Summand1D& s, const SumConfig& cfg) {
  const int kCuts = 5;
  long long N[kCuts];
  N[kCuts - 1] = std::max<long long>(cfg.direct_cutoff, 16000);
  for (int i = kCuts - 2; i >= 0; --i) N[i] = N[i + 1] / 2;
  long double partial[kCuts];
  Accum acc;
  int next = 0;
  for (long long n = s.start; n <= s.start + N[kCuts - 1] - 1; ++n) {
    acc.add(s.term((double)n));
    if (next < kCuts && n == s.start + N[next] - 1) partial[next++] = acc.sum();
  }
  long double A[5][6];
  for (int i = 0; i < kCuts; ++i) {
    const long double M = (long double)N[i] + 1.0L;
    const long double L = std::log((long double)M);
    A[i][0] = 1.0L;
    A[i][1] = -L / M;
    A[i][2] = -1.0L / M;
    A[i][3] = -L / (M * M);
    A[i][4] = -1.0L / (M * M);
    A[i][5] = partial[i];
  }
  long double x5[5];
  solve_inplace(5, A, x5);

  long double B[5][6];
  for (int i = 0; i < 4; ++i) {
    const long double M = (long double)N[i + 1] + 1.0L;
    const long double L = std::log((long double)M);
    B[i][0] = 1.0L;
    B[i][1] = -L / M;
    B[i][2] = -1.0L / M;
    B[i][3] = -1.0L / (M * M);
    B[i][4] = partial[i + 1];  // rhs column for the 4-unknown solve
    B[i][5] = 0.0L;
  }
  long double x4[5];
  solve_inplace(4, B, x4);

  SumResult r;
  r.value = (double)x5[0];
  const double model_gap = std::fabs((double)(x5[0] - x4[0]));
  const double L0 = std::log((double)N[0] + 1.0);
  const double floor_resid =
      20.0 * (L0 * L0 * L0 + 1.0) / std::pow((double)N[0] + 1.0, 3.0);
  r.error_estimate =
      2.0 * model_gap + floor_resid + 4.0 * kEps * acc.abs + 1e-14;
  r.terms_used = N[kCuts - 1];
  r.strategy = "richardson-log";
  return r;
}

}  // namespace

SumConfig& sum_config() {
  static SumConfig cfg;
  return cfg;
}

SumResult sum_1d(const Summand1D& s, double target_abs_err,
                 const SumConfig& cfg) {
  const double target = std::fmax(target_abs_err, 1e-14);

  if (const auto* alt = std::get_if<AlternatingDecay>(&s.tail)) {
    long long pairs = cfg.pair_cutoff;
    for (int attempt = 0;; ++attempt) {
      long long evals = 0;
      SumResult r = sum_alternating(s, *alt, pairs, target, &evals);
      if (r.error_estimate <= target) return r;
      if (attempt == 1 || 8 * pairs > cfg.term_budget)
        throw NoConvergence("sum_1d: alternating tail above target", r.value,
                            r.error_estimate);
      pairs *= 4;
    }
  }

  if (std::holds_alternative<ExponentialDecay>(s.tail)) {
    Accum acc;
    double prev = 0.0, t = 0.0;
    long long n = s.start, used = 0;
    for (;; ++n, ++used) {
      if (used > 200000)
        throw NoConvergence("sum_1d: exponential series did not settle",
                            acc.sum(), std::fabs(t));
      t = s.term((double)n);
      acc.add(t);
      if (used >= 6 && std::fabs(t) <
                           std::fmax(target * 0.05,
                                     1e-18 * (1.0 + std::fabs(acc.sum()))))
        break;
      prev = t;
    }
    double ratio = prev != 0.0 ? std::fabs(t / prev) : 0.5;
    ratio = std::clamp(ratio, 0.0, 0.95);
    SumResult r;
    r.value = acc.sum();
    r.error_estimate = std::fabs(t) * ratio / (1.0 - ratio) +
                       4.0 * kEps * acc.abs + kEps * std::fabs(r.value);
    r.terms_used = used + 1;
    r.strategy = "direct-geometric";
    return r;
  }

  if (const auto* custom = std::get_if<CustomTail>(&s.tail)) {
    SumResult r = direct_plus_tail(s, cfg.direct_cutoff,
                                   [&](double N) { return custom->tail(N); },
                                   "direct-custom-tail");
    if (r.error_estimate > target)
      throw NoConvergence("sum_1d: custom tail above target", r.value,
                          r.error_estimate);
    return r;
  }

  // PolyLogDecay
  long long cutoff = cfg.direct_cutoff;
  for (int attempt = 0;; ++attempt) {
    long long evals = 0;
    SumResult r = direct_plus_tail(
        s, cutoff,
        [&](double N) { return em_tail(s.term, N, target * 0.1, &evals); },
        "direct-euler-maclaurin");
    r.terms_used += evals;
    if (r.error_estimate <= target) return r;
    if (attempt == 1 || 4 * cutoff > cfg.term_budget)
      throw NoConvergence("sum_1d: tail estimate above target", r.value,
                          r.error_estimate);
    cutoff *= 4;
  }
}

SumResult sum_1d_crosscheck(const Summand1D& s, const SumConfig& cfg) {
  if (const auto* alt = std::get_if<AlternatingDecay>(&s.tail)) {
    const double sign0 = (double)alt->first_sign;
    auto a = [&](double j) { return alt->magnitude((double)s.start + j); };
    const double v1 = sign0 * cvz_accelerate(a, 64);
    const double v2 = sign0 * cvz_accelerate(a, 80);
    SumResult r;
    r.value = v2;
    r.error_estimate =
        20.0 * std::fabs(v2 - v1) + 1e-12 * (1.0 + std::fabs(v2));
    r.terms_used = 64 + 80;
    r.strategy = "cvz-acceleration";
    return r;
  }
  if (std::holds_alternative<ExponentialDecay>(s.tail)) {
    Accum acc;
    double t = 0.0;
    long long n = s.start, used = 0;
    for (;; ++n, ++used) {
      if (used > 300000)
        throw NoConvergence("crosscheck: exponential series did not settle",
                            acc.sum(), std::fabs(t));
      t = s.term((double)n);
      acc.add(t);
      if (used >= 8 &&
          std::fabs(t) < 1e-17 * (1.0 + std::fabs(acc.sum())))
        break;
    }
    SumResult r;
    r.value = acc.sum();
    r.error_estimate = 20.0 * std::fabs(t) + 4.0 * kEps * acc.abs;
    r.terms_used = used + 1;
    r.strategy = "direct-tight";
    return r;
  }
  return richardson_log(s, cfg);
}

double lemma_partial_fraction(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0))
    throw std::domain_error("lemma_partial_fraction: requires a, b >= 0");
  if (std::fabs(a - b) < 1e-9 * (1.0 + std::fabs(a) + std::fabs(b)))
    return trigamma(1.0 + 0.5 * (a + b));
  return (digamma(1.0 + b) - digamma(1.0 + a)) / (b - a);
}

double lemma_gamma_ratio(int k) {
  if (k < 1) throw std::domain_error("lemma_gamma_ratio: requires k >= 1");
  return std::exp(gamma_ratio_log((double)k, 1.0 + 2.0 * k));
}

SumResult sum_2d(const Summand2D& s, double target_abs_err,
                 const SumConfig& cfg) {
  if (s.reduction) {
    SumResult r = sum_1d(*s.reduction, target_abs_err, cfg);
    r.strategy = "reduced:" + r.strategy;
    return r;
  }
  const double target = std::fmax(target_abs_err, 1e-12);
  const long long K = cfg.outer_cutoff;
  const long long n_in = cfg.inner_cutoff;
  const double inner_quad_tol = std::fmax(1e-13, 0.25 * target / (double)K);
  long long evals = 0;
  double inner_err_total = 0.0;

  // Row sum over the inner index as a smooth function of the outer one; the
  // inner cutoff is held fixed so the function stays smooth in kappa.
  auto row = [&](double kappa, double* err_out) {
    Accum acc;
    const double n0 = (double)s.inner_start;
    for (long long j = 0; j < n_in; ++j) acc.add(s.term(n0 + (double)j, kappa));
    evals += n_in;
    auto f = [&](double x) { return s.term(x, kappa); };
    const TailEstimate t =
        em_tail(f, n0 + (double)n_in - 1.0, inner_quad_tol, &evals);
    if (err_out) *err_out = t.error + 4.0 * kEps * acc.abs;
    return acc.sum() + t.value;
  };

  Accum rows;
  for (long long k = s.outer_start; k < s.outer_start + K; ++k) {
    double e = 0.0;
    rows.add(row((double)k, &e));
    inner_err_total += e;
  }
  auto row_noerr = [&](double kappa) { return row(kappa, nullptr); };
  const TailEstimate outer = em_tail(
      row_noerr, (double)(s.outer_start + K - 1), target * 0.1, &evals);

  SumResult r;
  r.value = rows.sum() + outer.value;
  r.error_estimate = inner_err_total + outer.error + 4.0 * kEps * rows.abs +
                     kEps * std::fabs(r.value);
  r.terms_used = evals;
  r.strategy = "rowwise-euler-maclaurin";
  if (r.error_estimate > target)
    throw NoConvergence("sum_2d: error estimate above target", r.value,
                        r.error_estimate);
  return r;
}

namespace tails {

double inv_square(double N) { return trigamma(N + 1.0); }

double inv_cube(double N) {
  const double M = N + 1.0;
  return 0.5 / (M * M) + 0.5 / (M * M * M) + 0.25 / (M * M * M * M) -
         1.0 / (12.0 * std::pow(M, 6));
}

double log_over_square(double N) {
  const double M = N + 1.0;
  const double L = std::log(M);
  return (L + 1.0) / M + L / (2.0 * M * M) + (2.0 * L - 1.0) / (12.0 * M * M * M) +
         (26.0 - 24.0 * L) / (720.0 * std::pow(M, 5));
}

double log_over_cube(double N) {
  const double M = N + 1.0;
  const double L = std::log(M);
  return (2.0 * L + 1.0) / (4.0 * M * M) + L / (2.0 * M * M * M) +
         (3.0 * L - 1.0) / (12.0 * std::pow(M, 4)) +
         (47.0 - 60.0 * L) / (720.0 * std::pow(M, 6));
}

double log2_over_square(double N) {
  const double M = N + 1.0;
  const double L = std::log(M);
  return (L * L + 2.0 * L + 2.0) / M + L * L / (2.0 * M * M) +
         (L * L - L) / (6.0 * M * M * M) +
         (-24.0 * L * L + 52.0 * L - 18.0) / (720.0 * std::pow(M, 5));
}

}  // namespace tails
}  // namespace eulersum
