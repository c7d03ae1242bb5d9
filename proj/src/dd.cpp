#include "mathieu/dd.hpp"

#include <limits>

namespace mathieu {

namespace {

// ln(2) split to double-double.
constexpr Dd kLn2{6.931471805599453e-01, 2.3190468138462996e-17};

// Core of exp: computes exp(r) - 1 for |r| <= ln2/2 via scaling by 2^-9,
// a short Taylor series, and nine unsquaring steps of (1+s)^2 - 1 = s(2+s).
// The inverse factorials must themselves be double-double: rounding them to
// bare doubles caps the result near 1e-24.
const Dd* inv_factorials() {
  static const auto table = [] {
    static Dd t[11];
    double fact = 1.0;
    for (int k = 3; k <= 10; ++k) {
      fact = 1.0;
      for (int i = 2; i <= k; ++i) fact *= i;
      t[k] = Dd(1.0) / Dd(fact);
    }
    return &t[0];
  }();
  return table;
}

Dd exp_reduced_m1(Dd r) {
  const Dd* invf = inv_factorials();
  r = dd_ldexp(r, -9);  // |r| <= ln2/1024
  Dd p = dd_sqr(r);
  Dd s = r + dd_ldexp(p, -1);
  Dd t = p * r;  // r^3
  for (int k = 3; k <= 10; ++k) {
    s += t * invf[k];
    t = t * r;
  }
  for (int i = 0; i < 9; ++i) s = dd_ldexp(s, 1) + dd_sqr(s);
  return s;
}

}  // namespace

Dd dd_exp(Dd x) {
  if (x.hi <= -746.0) return Dd(0.0);
  if (x.hi >= 709.0) return Dd(std::numeric_limits<double>::infinity());
  double m = std::floor(x.hi / kLn2.hi + 0.5);
  Dd r = x - kLn2 * Dd(m);
  Dd em1 = exp_reduced_m1(r);
  return dd_ldexp(em1 + Dd(1.0), static_cast<int>(m));
}

Dd dd_expm1(Dd x) {
  if (std::fabs(x.hi) < 0.34657359027997264) {  // ln2/2: no reduction needed
    return exp_reduced_m1(x);
  }
  return dd_exp(x) - Dd(1.0);
}

Dd dd_log(Dd x) {
  // Seed with the double log, then one third-order Newton correction:
  // y += d - d^2/2 with d = x*exp(-y) - 1.
  double y0 = std::log(x.hi);
  Dd d = x * dd_exp(Dd(-y0)) - Dd(1.0);
  Dd corr = d - dd_ldexp(dd_sqr(d), -1);
  return Dd(y0) + corr;
}

Dd dd_pow(Dd x, Dd y) { return dd_exp(y * dd_log(x)); }

}  // namespace mathieu
