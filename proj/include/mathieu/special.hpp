#pragma once

// Real-argument gamma, digamma, Bernoulli numbers, and the Hurwitz zeta
// zeta(s,a) analytically continued to all real s != 1, plus the alternating
// zeta (entire in s). Continuation is Euler-Maclaurin with a double-double
// accumulator; the summation cutoff N is chosen from (s, a) so the formula
// stays well-conditioned on both sides of s = 0.

#include <vector>

#include "mathieu/types.hpp"

namespace mathieu {

// Guard band around the s = 1 pole of zeta(s,a).
inline constexpr double kZetaPoleGuard = 1e-6;

// Euler gamma-function; pole_error at nonpositive integers.
double gamma(double s);
// log Gamma(s) for s > 0.
double log_gamma(double s);
// psi(s) = Gamma'(s)/Gamma(s) for s > 0.
double digamma(double s);

struct BernoulliTable {
  std::vector<double> values;  // B_0..B_N, convention B_1 = -1/2
};
// Exact-to-1-ulp Bernoulli numbers B_0..B_N, N <= 82.
BernoulliTable bernoulli_numbers(int n);

// zeta(s,a) for all real s != 1 (pole_error inside the guard band), a > 0.
double hurwitz_zeta(double s, double a, const Precision& prec = {});

// Regularized value zeta(s,a) - 1/(s-1); continuous through s = 1 where it
// equals -digamma(a). Accepts any real s.
double hurwitz_zeta_near_pole(double s, double a);

// Alternating zeta: sum (-1)^k (k+a)^{-s}, continued to all real s.
double alt_hurwitz_zeta(double s, double a, const Precision& prec = {});

struct OracleValue {
  double value;
  double err_estimate;
};
// Partial sum of Hurwitz's Fourier-type formula (valid s < 0, 0 < a <= 1),
// used by tests as an independent cross-check of the continuation.
OracleValue hurwitz_formula_oracle(double s, double a, long k_terms);

namespace detail {
// Internal: value plus a relative-error estimate from the Euler-Maclaurin
// stopping term; surfaced so the CLI can report an error estimate.
struct ZetaEval {
  double value;
  double err_estimate;  // absolute
};
ZetaEval hurwitz_zeta_eval(double s, double a);
ZetaEval alt_hurwitz_zeta_eval(double s, double a);
}  // namespace detail

}  // namespace mathieu
