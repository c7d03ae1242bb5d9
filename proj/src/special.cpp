#include "mathieu/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mathieu/dd.hpp"
#include "zeta_tables.hpp"

namespace mathieu {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 6.283185307179586476925286766559005768;

// Lanczos rational approximation, N=13, g=6.024680040776729583740234375
// (the standard double-precision coefficient set).
constexpr double kLanczosG = 6.024680040776729583740234375;

double lanczos_sum(double z) {
  static const double num[13] = {
      23531376880.410759688572007674451636754734846804940,
      42919803642.649098768957899047001988850926355848959,
      35711959237.355668049440185451547166705960488635843,
      17921034426.037209699919755754458931112671403265390,
      6039542586.3520280050642916443072979210699388420708,
      1439720407.3117216736632230727949123939715485786772,
      248874557.86205415651146038641322942321632125127801,
      31426415.585400194380614231628318205362874684987640,
      2876370.6289353724412254090516208496135991145378768,
      186056.26539522349504029498971604569928220784236328,
      8071.6720023658162106380029022722506138218516325024,
      210.82427775157934587250973392071336271166969580291,
      2.5066282746310002701649081771338373386264310793408,
  };
  static const double den[13] = {
      0.0, 39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0,
      13339535.0, 2637558.0, 357423.0, 32670.0, 1925.0, 66.0, 1.0,
  };
  // Rational in z (or 1/z for large z, to avoid overflow in the powers).
  if (z <= 1.0e30) {
    double s1 = num[12], s2 = den[12];
    for (int i = 11; i >= 0; --i) {
      s1 = s1 * z + num[i];
      s2 = s2 * z + den[i];
    }
    return s1 / s2;
  }
  double r = 1.0 / z;
  double s1 = num[0], s2 = den[0];
  for (int i = 1; i < 13; ++i) {
    s1 = s1 * r + num[i];
    s2 = s2 * r + den[i];
  }
  return s1 / s2;
}

// sin(pi*x) with exact reduction at integers.
double sin_pi(double x) {
  double n = std::floor(x + 0.5);
  double r = x - n;
  double s = std::sin(kPi * r);
  return (std::fmod(n, 2.0) != 0.0) ? -s : s;
}

bool is_nonpositive_integer(double s) {
  return s <= 0.0 && s == std::floor(s);
}

double gamma_positive(double s) {
  // s >= 0.5
  double t = s + kLanczosG - 0.5;
  return lanczos_sum(s) * std::pow(t, s - 0.5) * std::exp(-t);
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin core for zeta(s,a), double-double accumulation.
// ---------------------------------------------------------------------------

constexpr Dd kDdOne{1.0, 0.0};

Dd dd_of(detail::DdConst c) { return {c.hi, c.lo}; }

struct EmOut {
  Dd value;
  double rel_err;  // estimate from the stopping term and cancellation
};

long em_cutoff(double s, double a) {
  if (s >= -0.5) {
    long n1 = static_cast<long>(std::ceil(std::fabs(s))) + 10;
    long n2 = static_cast<long>(std::ceil(10.0 - a));
    return std::max({n1, n2, 10L});
  }
  // For s < 0 the partial sum and the correction terms cancel against each
  // other; keep N+a near (|s|+8)/(2*pi) so the correction series still decays
  // while the cancellation stays within the double-double budget.
  double want = (-s + 8.0) / kTwoPi - a;
  return want > 0.0 ? static_cast<long>(std::ceil(want)) : 0;
}

EmOut em_core(double s, double a, bool regularized, long n_cut) {
  Dd acc{0.0};
  double peak = 0.0;  // largest intermediate magnitude, for the error estimate
  auto add = [&](Dd t) {
    acc += t;
    peak = std::max({peak, std::fabs(t.hi), std::fabs(acc.hi)});
  };

  Dd neg_s = Dd(-s);
  for (long k = 0; k < n_cut; ++k) {
    Dd base = dd_detail::two_sum(static_cast<double>(k), a);
    add(dd_pow(base, neg_s));
  }

  Dd na = dd_detail::two_sum(static_cast<double>(n_cut), a);
  Dd lg = dd_log(na);

  // 1-s and s-1 as exact double-doubles: rounding them to bare doubles
  // perturbs the largest (mutually cancelling) terms at 1e-16 relative.
  Dd one_minus_s = dd_detail::two_sum(1.0, -s);
  if (regularized) {
    // ((N+a)^{1-s} - 1)/(s-1) = -log(N+a)*phi(z), z=(1-s)log(N+a),
    // phi(z)=expm1(z)/z; removes the pole exactly.
    Dd z = one_minus_s * lg;
    Dd phi = (z.hi == 0.0 && z.lo == 0.0) ? kDdOne : dd_expm1(z) / z;
    add(-(lg * phi));
  } else {
    add(dd_exp(one_minus_s * lg) / (-one_minus_s));
  }

  Dd p0 = dd_exp(neg_s * lg);
  add(dd_ldexp(p0, -1));

  // Correction series with optimal truncation. A single Pochhammer factor
  // near zero makes one term dip and the next rebound without the series
  // having turned; stop only on persistent growth.
  Dd poch = Dd(s);
  Dd p = dd_exp((neg_s - kDdOne) * lg);
  Dd na2_inv = kDdOne / dd_sqr(na);
  double prev_mag = std::numeric_limits<double>::infinity();
  double stop_mag = 0.0;
  Dd stash{};
  double stash_mag = 0.0;
  bool have_stash = false;
  for (int j = 1; j <= detail::kEmCoeffMax; ++j) {
    Dd term = dd_of(detail::kEmCoeff[j]) * poch * p;
    double mag = std::fabs(term.hi);
    poch *= dd_detail::two_sum(s, 2.0 * j - 1.0) *
            dd_detail::two_sum(s, 2.0 * j);
    p *= na2_inv;
    if (have_stash) {
      if (mag >= stash_mag) {  // two growths in a row: the tail has turned
        stop_mag = stash_mag;
        break;
      }
      add(stash);
      have_stash = false;
    } else if (mag > prev_mag) {
      stash = term;
      stash_mag = mag;
      have_stash = true;
      stop_mag = mag;
      continue;
    }
    add(term);
    stop_mag = mag;
    prev_mag = mag;
    if (mag <= 1e-33 * (std::fabs(acc.hi) + 1e-300)) break;
  }

  double scale = std::max(std::fabs(acc.to_double()), 1e-300);
  EmOut out;
  out.value = acc;
  out.rel_err = (stop_mag + peak * 2.5e-31) / scale;
  return out;
}

EmOut hurwitz_dd(double s, double a, bool regularized) {
  long n0 = em_cutoff(s, a);
  EmOut best = em_core(s, a, regularized, n0);
  if (s < -0.5) {
    // The truncation floor falls and the cancellation grows with N; the
    // stopping-term/peak estimate tracks the true error well, so scan a few
    // candidate cutoffs and keep the best-conditioned one.
    for (long bump : {-3L, -2L, -1L, 1L, 2L, 4L, 7L}) {
      long n = n0 + bump;
      if (n < 0 || n == n0) continue;
      if (best.rel_err <= 1e-17) break;
      EmOut alt = em_core(s, a, regularized, n);
      if (alt.rel_err < best.rel_err) best = alt;
    }
  }
  return best;
}

Dd pow2_one_minus_s(double s) {  // 2^{1-s}
  return dd_exp(dd_detail::two_sum(1.0, -s) * dd_of(detail::kDdLn2));
}

EmOut alt_hurwitz_dd(double s, double a) {
  Dd two_pow = pow2_one_minus_s(s);
  if (std::fabs(s - 1.0) <= 0.25) {
    // Regularized pieces: the 1/(s-1) poles cancel; the leftover
    // (1 - 2^{1-s})/(s-1) equals ln2 * phi((1-s)ln2).
    EmOut r1 = hurwitz_dd(s, a, true);
    EmOut r2 = hurwitz_dd(s, 0.5 * (a + 1.0), true);
    Dd ln2 = dd_of(detail::kDdLn2);
    Dd u = dd_detail::two_sum(1.0, -s) * ln2;
    Dd phi = (u.hi == 0.0 && u.lo == 0.0) ? kDdOne : dd_expm1(u) / u;
    EmOut out;
    out.value = r1.value - two_pow * r2.value + ln2 * phi;
    double scale = std::max(std::fabs(out.value.to_double()), 1e-300);
    out.rel_err = (r1.rel_err * std::fabs(r1.value.hi) +
                   r2.rel_err * std::fabs(two_pow.hi * r2.value.hi)) /
                      scale +
                  4e-16;
    return out;
  }
  EmOut z1 = hurwitz_dd(s, a, false);
  EmOut z2 = hurwitz_dd(s, 0.5 * (a + 1.0), false);
  EmOut out;
  out.value = z1.value - two_pow * z2.value;
  double scale = std::max(std::fabs(out.value.to_double()), 1e-300);
  out.rel_err = (z1.rel_err * std::fabs(z1.value.hi) +
                 z2.rel_err * std::fabs(two_pow.hi * z2.value.hi)) /
                    scale +
                4e-16;
  return out;
}

void check_offset(double a, const char* fn) {
  if (!(a > 0.0)) throw domain_error(std::string(fn) + " requires a > 0");
}

}  // namespace

double gamma(double s) {
  if (is_nonpositive_integer(s))
    throw pole_error("gamma pole at nonpositive integer s");
  if (s >= 0.5) return gamma_positive(s);
  // Reflection Gamma(s)Gamma(1-s) = pi/sin(pi s).
  return kPi / (sin_pi(s) * gamma_positive(1.0 - s));
}

double log_gamma(double s) {
  if (!(s > 0.0)) throw domain_error("log_gamma requires s > 0");
  if (s < 0.5) return std::log(kPi / sin_pi(s)) - log_gamma(1.0 - s);
  double t = s + kLanczosG - 0.5;
  return std::log(lanczos_sum(s)) + (s - 0.5) * std::log(t) - t;
}

double digamma(double s) {
  if (!(s > 0.0)) throw domain_error("digamma requires s > 0");
  double acc = 0.0;
  while (s < 10.0) {
    acc -= 1.0 / s;
    s += 1.0;
  }
  // psi(s) ~ ln s - 1/(2s) - sum_j B_{2j}/(2j s^{2j})
  double u = 1.0 / (s * s);
  double series =
      1.0 / 12.0 -
      u * (1.0 / 120.0 -
           u * (1.0 / 252.0 -
                u * (1.0 / 240.0 -
                     u * (1.0 / 132.0 -
                          u * (691.0 / 32760.0 - u * (1.0 / 12.0))))));
  return acc + std::log(s) - 0.5 / s - u * series;
}

BernoulliTable bernoulli_numbers(int n) {
  if (n < 1) throw parameter_error("bernoulli_numbers requires N >= 1");
  if (n > detail::kBernoulliMax)
    throw parameter_error("Bernoulli table covers B_0..B_82");
  BernoulliTable t;
  t.values.resize(n + 1);
  for (int i = 0; i <= n; ++i) t.values[i] = detail::kBernoulli[i].hi;
  return t;
}

double hurwitz_zeta(double s, double a, const Precision& prec) {
  prec.validate();
  check_offset(a, "hurwitz_zeta");
  if (std::fabs(s - 1.0) < kZetaPoleGuard)
    throw pole_error("pole at s=1; use hurwitz_zeta_near_pole");
  return hurwitz_dd(s, a, false).value.to_double();
}

double hurwitz_zeta_near_pole(double s, double a) {
  check_offset(a, "hurwitz_zeta_near_pole");
  return hurwitz_dd(s, a, true).value.to_double();
}

double alt_hurwitz_zeta(double s, double a, const Precision& prec) {
  prec.validate();
  check_offset(a, "alt_hurwitz_zeta");
  return alt_hurwitz_dd(s, a).value.to_double();
}

OracleValue hurwitz_formula_oracle(double s, double a, long k_terms) {
  if (!(s < 0.0)) throw domain_error("hurwitz_formula_oracle requires s < 0");
  if (!(a > 0.0 && a <= 1.0))
    throw domain_error("hurwitz_formula_oracle requires a in (0,1]");
  if (k_terms < 1) throw parameter_error("hurwitz_formula_oracle: K >= 1");

  double pref = 2.0 * gamma(1.0 - s) / std::pow(kTwoPi, 1.0 - s);
  double half_pi_s = 0.5 * kPi * s;
  double sum = 0.0, comp = 0.0, abs_sum = 0.0;
  for (long k = 1; k <= k_terms; ++k) {
    double frac = std::fmod(a * static_cast<double>(k), 1.0);
    double term =
        std::sin(kTwoPi * frac + half_pi_s) * std::pow(static_cast<double>(k), s - 1.0);
    double t = sum + term;
    comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    abs_sum += std::fabs(term);
  }
  double value = pref * (sum + comp);
  double tail = std::pow(static_cast<double>(k_terms), s) / (-s);
  OracleValue out;
  out.value = value;
  out.err_estimate = pref * tail + 1e-15 * pref * abs_sum;
  return out;
}

namespace detail {

ZetaEval hurwitz_zeta_eval(double s, double a) {
  check_offset(a, "hurwitz_zeta");
  if (std::fabs(s - 1.0) < kZetaPoleGuard)
    throw pole_error("pole at s=1; use hurwitz_zeta_near_pole");
  EmOut r = hurwitz_dd(s, a, false);
  double v = r.value.to_double();
  return {v, std::max(r.rel_err, 4e-16) * std::fabs(v)};
}

ZetaEval alt_hurwitz_zeta_eval(double s, double a) {
  check_offset(a, "alt_hurwitz_zeta");
  EmOut r = alt_hurwitz_dd(s, a);
  double v = r.value.to_double();
  return {v, std::max(r.rel_err, 4e-16) * std::fabs(v)};
}

}  // namespace detail

}  // namespace mathieu
