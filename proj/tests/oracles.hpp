#pragma once

// Test-side oracles, kept independent of the library's evaluation paths:
// exact-rational Bernoulli numbers/polynomials from the defining recurrence,
// direct and alternating zeta sums with integral bracketing, a Richardson
// limit for the Euler-Mascheroni constant, and plain long-double series sums.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracles {

// ---------------------------------------------------------------------------
// Exact rationals over __int128 (small Bernoulli-number work only).
// ---------------------------------------------------------------------------

struct Rational {
  __int128 num = 0;
  __int128 den = 1;

  static __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    __int128 g = gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  Rational plus(const Rational& o) const {
    Rational r{num * o.den + o.num * den, den * o.den};
    r.reduce();
    return r;
  }
  Rational times_int(__int128 k) const {
    Rational r{num * k, den};
    r.reduce();
    return r;
  }
  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

inline __int128 binomial(int n, int k) {
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// B_0..B_n from sum_{j<=m} C(m+1,j) B_j = 0 (B_1 = -1/2 convention).
// Exact for n <= 24 within __int128.
inline std::vector<Rational> bernoulli_rational(int n) {
  if (n > 24) throw std::out_of_range("rational Bernoulli oracle capped at 24");
  std::vector<Rational> b(n + 1);
  b[0] = {1, 1};
  for (int m = 1; m <= n; ++m) {
    Rational acc{0, 1};
    for (int j = 0; j < m; ++j)
      acc = acc.plus(b[j].times_int(binomial(m + 1, j)));
    acc = acc.times_int(-1);
    acc.den *= (m + 1);
    acc.reduce();
    b[m] = acc;
  }
  return b;
}

// B_n(a) = sum_k C(n,k) B_k a^{n-k} with exact rational coefficients, n <= 24.
inline double bernoulli_poly(int n, double a) {
  auto b = bernoulli_rational(n);
  long double acc = 0.0L;
  for (int k = 0; k <= n; ++k) {
    long double c = static_cast<long double>(binomial(n, k)) *
                    static_cast<long double>(b[k].to_double());
    acc = acc * a + c;
  }
  return static_cast<double>(acc);
}

// Hurwitz zeta for s >= 2 by direct summation, tail bracketed by integrals:
// sum_{k>=N} (k+a)^-s lies in [I(N+1), I(N)], I(M) = (M+a)^{1-s}/(s-1).
inline double zeta_direct(double s, double a, double tol = 1e-13) {
  long double sum = 0.0L, comp = 0.0L;
  double n = 0.0;
  for (;;) {
    long double t = powl(static_cast<long double>(n) + a, -s);
    long double v = sum + t;
    comp += (fabsl(sum) >= fabsl(t)) ? (sum - v) + t : (t - v) + sum;
    sum = v;
    n += 1.0;
    if (n >= 16.0) {
      long double i_lo = powl(n + 1.0 + a, 1.0L - s) / (s - 1.0);
      long double i_hi = powl(n + a, 1.0L - s) / (s - 1.0);
      if (static_cast<double>(i_hi - i_lo) < tol)
        return static_cast<double>(sum + comp + 0.5L * (i_lo + i_hi));
    }
    if (n > 5e7) throw std::runtime_error("zeta_direct: did not converge");
  }
}

// Alternating zeta for s > 0 by direct summation with the averaged-partial-sum
// estimate; remainder bounded by half the last term difference.
inline double eta_direct(double s, double a, double tol = 1e-14) {
  long double sum = 0.0L;
  long double prev_t = 0.0L;
  for (long k = 0;; ++k) {
    long double t = powl(static_cast<long double>(k) + a, -s);
    long double st = (k % 2 == 0) ? t : -t;
    if (k > 8 && 0.5L * (prev_t - t) < tol && prev_t >= t)
      return static_cast<double>(sum + 0.5L * st);
    sum += st;
    prev_t = t;
    if (k > 50'000'000) throw std::runtime_error("eta_direct: did not converge");
  }
}

// Euler-Mascheroni via Richardson extrapolation of H_n - ln n.
inline double euler_mascheroni() {
  auto t0 = [](long n) {
    long double h = 0.0L;
    for (long k = n; k >= 1; --k) h += 1.0L / k;
    return h - logl(static_cast<long double>(n));
  };
  const long base = 1L << 13;
  long double t[4][4];
  for (int i = 0; i < 4; ++i) t[0][i] = t0(base << i);
  for (int lev = 1; lev < 4; ++lev) {
    long double w = powl(2.0L, lev);
    for (int i = 0; i + lev < 4; ++i)
      t[lev][i] = (w * t[lev - 1][i + 1] - t[lev - 1][i]) / (w - 1.0L);
  }
  return static_cast<double>(t[3][0]);
}

// Plain long-double sum of the exponential family; n_terms chosen by caller.
inline double brute_f(double x, double a, double gamma, double alpha,
                      long n_terms, bool alternating = false) {
  long double sum = 0.0L;
  for (long k = 0; k < n_terms; ++k) {
    long double base = static_cast<long double>(k) + a;
    long double t = powl(base, gamma) * expl(-powl(base, alpha) * x);
    sum += (alternating && (k % 2 == 1)) ? -t : t;
  }
  return static_cast<double>(sum);
}

// Plain long-double sum of the S family.
inline double brute_S(double x, double a, double gamma, double alpha, double mu,
                      long n_terms, bool alternating = false) {
  long double sum = 0.0L;
  for (long k = 0; k < n_terms; ++k) {
    long double base = static_cast<long double>(k) + a;
    long double t = powl(base, gamma) * powl(powl(base, alpha) + x, -mu);
    sum += (alternating && (k % 2 == 1)) ? -t : t;
  }
  return static_cast<double>(sum);
}

}  // namespace oracles
