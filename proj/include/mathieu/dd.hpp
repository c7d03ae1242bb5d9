#pragma once

// Double-double arithmetic (~31 decimal digits), used by the zeta core where
// the Euler-Maclaurin tail cancels catastrophically for negative s.
// Algorithms follow the classic error-free transformations (Dekker/Knuth)
// and the QD library's exp/log reductions.

#include <cmath>

namespace mathieu {

struct Dd {
  double hi = 0.0;
  double lo = 0.0;

  Dd() = default;
  constexpr Dd(double h) : hi(h), lo(0.0) {}
  constexpr Dd(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

namespace dd_detail {

inline Dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline Dd operator+(Dd x, Dd y) {
  using namespace dd_detail;
  Dd s = two_sum(x.hi, y.hi);
  Dd t = two_sum(x.lo, y.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Dd operator-(Dd x) { return {-x.hi, -x.lo}; }
inline Dd operator-(Dd x, Dd y) { return x + (-y); }

inline Dd operator*(Dd x, Dd y) {
  using namespace dd_detail;
  Dd p = two_prod(x.hi, y.hi);
  p.lo += x.hi * y.lo + x.lo * y.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline Dd operator/(Dd x, Dd y) {
  double q1 = x.hi / y.hi;
  Dd r = x - y * Dd(q1);
  double q2 = r.hi / y.hi;
  r = r - y * Dd(q2);
  double q3 = r.hi / y.hi;
  Dd q = dd_detail::quick_two_sum(q1, q2);
  return q + Dd(q3);
}

inline Dd& operator+=(Dd& x, Dd y) { x = x + y; return x; }
inline Dd& operator-=(Dd& x, Dd y) { x = x - y; return x; }
inline Dd& operator*=(Dd& x, Dd y) { x = x * y; return x; }
inline Dd& operator/=(Dd& x, Dd y) { x = x / y; return x; }

inline Dd dd_sqr(Dd x) {
  Dd p = dd_detail::two_prod(x.hi, x.hi);
  p.lo += 2.0 * x.hi * x.lo;
  return dd_detail::quick_two_sum(p.hi, p.lo);
}

inline Dd dd_ldexp(Dd x, int n) { return {std::ldexp(x.hi, n), std::ldexp(x.lo, n)}; }

inline double dd_abs_hi(Dd x) { return std::fabs(x.hi); }

// exp(x) - 1, accurate near zero; plain exp via dd_exp below.
Dd dd_expm1(Dd x);
Dd dd_exp(Dd x);
Dd dd_log(Dd x);
// x^y for x > 0.
Dd dd_pow(Dd x, Dd y);

}  // namespace mathieu
