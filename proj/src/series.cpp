#include "mathieu/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "mathieu/kernels.hpp"

namespace mathieu {

namespace {

constexpr int kBlock = 2048;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

struct TermSource {
  Family fam;
  double a, gamma, alpha, mu, x;

  void fill(long k0, int n, double* out) const {
    const auto& k = kernels::active();
    switch (fam) {
      case Family::f:
      case Family::f_alt:
        k.exp_terms(k0, n, a, gamma, alpha, x, out);
        break;
      case Family::g:
      case Family::g_alt:
        k.rational_terms(k0, n, a, gamma, alpha, mu, x, /*s_form=*/false, out);
        break;
      case Family::S:
      case Family::S_alt:
        k.rational_terms(k0, n, a, gamma, alpha, mu, x, /*s_form=*/true, out);
        break;
    }
  }

  double term(long k) const {
    double t;
    // scalar kernel for single probes
    switch (fam) {
      case Family::f:
      case Family::f_alt:
        kernels::scalar_kernels().exp_terms(k, 1, a, gamma, alpha, x, &t);
        break;
      case Family::g:
      case Family::g_alt:
        kernels::scalar_kernels().rational_terms(k, 1, a, gamma, alpha, mu, x,
                                                 false, &t);
        break;
      case Family::S:
      case Family::S_alt:
        kernels::scalar_kernels().rational_terms(k, 1, a, gamma, alpha, mu, x,
                                                 true, &t);
        break;
    }
    return t;
  }

  // First index from which the term magnitude is nonincreasing.
  long k_star() const {
    if (gamma <= 0.0) return 0;
    double w_need;  // threshold on (k+a)^alpha
    switch (fam) {
      case Family::f:
      case Family::f_alt:
        w_need = gamma / (alpha * x);
        break;
      case Family::g:
      case Family::g_alt:
        w_need = gamma / ((mu * alpha - gamma) * x);
        break;
      case Family::S:
      case Family::S_alt:
        if (x == 0.0) return 0;
        w_need = gamma * x / (mu * alpha - gamma);
        break;
      default:
        w_need = 0.0;
    }
    if (!(w_need > 0.0)) return 0;
    double k = std::pow(w_need, 1.0 / alpha) - a;
    if (!(k > 0.0)) return 0;
    if (k > 9.0e15) return std::numeric_limits<long>::max() / 2;
    return static_cast<long>(std::ceil(k)) + 1;
  }
};

struct Neumaier {
  double sum = 0.0, comp = 0.0;
  void add(double t) {
    double s = sum + t;
    comp += (std::fabs(sum) >= std::fabs(t)) ? (sum - s) + t : (t - s) + sum;
    sum = s;
  }
  double total() const { return sum + comp; }
};

double rounding_allowance(double abs_sum, long terms) {
  return 10.0 * kEps * abs_sum *
         (1.0 + static_cast<double>(terms) / 1.0e4);
}

// ---------------------------------------------------------------------------
// Tail machinery for the non-alternating families.
// ---------------------------------------------------------------------------

// Upper bound of the f-family tail sum_{k>=N} t(k):
//   tail <= t(N) + Gamma(c, v)/(alpha x^c),  v=(N+a)^alpha x, c=(gamma+1)/alpha,
// with the incomplete gamma replaced by the closed-form majorant
// Gamma(c,v) <= Cm v^{c-1} e^{-v} valid for v >= max(1, 2(c-1)).
struct FTail {
  double c, vmin, log_cm;
  FTail(double gamma, double alpha) {
    c = (gamma + 1.0) / alpha;
    vmin = std::max(1.0, 2.0 * (c - 1.0));
    log_cm = c > 1.0 ? std::log(2.0) : 0.0;
  }
  // returns +inf if the majorant does not yet apply
  double bound(const TermSource& src, long n, double t_n) const {
    double na = static_cast<double>(n) + src.a;
    double v = std::pow(na, src.alpha) * src.x;
    if (!(v >= vmin)) return kInf;
    double lm = log_cm + (c - 1.0) * std::log(v) - v - std::log(src.alpha) -
                c * std::log(src.x);
    return t_n + std::exp(lm);
  }
};

// Q(c,mu,z0) = int_{z0}^inf z^{c-1} (1+z)^{-mu} dz, via the alternating
// binomial series in 1/z0; valid (terms decreasing) once z0 > mu.
// Returns log(Q) and the first omitted term magnitude relative to Q.
struct QResult {
  double log_q;
  double rel_err;
  bool ok;
};

QResult q_integral(double c, double mu, double z0) {
  QResult r{0.0, 0.0, false};
  if (!(z0 > std::max(2.0, 1.25 * mu))) return r;
  double cj = 1.0;  // Gamma(mu+j)/(Gamma(mu) j!)
  double zpow = 1.0;
  double sum = 0.0, last = kInf;
  int j = 0;
  for (; j <= 200; ++j) {
    double term = cj * zpow / (mu - c + j);
    if (std::fabs(term) > last) return r;  // not decreasing: refuse
    sum += (j % 2 == 0) ? term : -term;
    last = std::fabs(term);
    if (last <= 1e-17 * std::fabs(sum)) break;
    cj *= (mu + j) / (j + 1.0);
    zpow /= z0;
  }
  if (!(sum > 0.0)) return r;
  r.log_q = (c - mu) * std::log(z0) + std::log(sum);
  r.rel_err = last / sum + 1e-14;
  r.ok = true;
  return r;
}

// ---------------------------------------------------------------------------

EvalResult eval_positive(const TermSource& src, const Precision& prec) {
  EvalResult out;
  Neumaier sum;
  const double eps_tr = 0.5 * prec.abs_tol;
  const long kstar = src.k_star();
  const double c = (src.gamma + 1.0) / src.alpha;
  const bool is_f = (src.fam == Family::f);
  const bool is_s = (src.fam == Family::S);
  FTail ftail(src.gamma, src.alpha);

  std::array<double, kBlock> buf;
  long k = 0;
  double trunc = kInf;
  bool done = false;

  while (!done && k < prec.max_terms) {
    int n = static_cast<int>(std::min<long>(kBlock, prec.max_terms - k));
    src.fill(k, n, buf.data());
    for (int i = 0; i < n; ++i) sum.add(buf[i]);
    k += n;
    if (!std::isfinite(sum.sum))
      throw std::overflow_error("series term overflow");
    if (k < kstar) continue;

    double t_n = src.term(k);
    if (is_f) {
      trunc = ftail.bound(src, k, t_n);
      if (trunc <= eps_tr) done = true;
    } else {
      // g/S: once z0 is comfortable and t_n small, add the tail integral as a
      // correction; the residual uncertainty is t_n/2 plus the Q-series cut.
      double na = static_cast<double>(k) + src.a;
      double w = std::pow(na, src.alpha);
      if (src.x == 0.0) {
        // S at x=0: pure power tail
        if (t_n <= eps_tr) {
          double q = src.alpha * src.mu - src.gamma;  // > 1
          double integral =
              std::pow(na, src.gamma - src.alpha * src.mu + 1.0) / (q - 1.0);
          sum.add(integral + 0.5 * t_n);
          trunc = 0.5 * t_n + 1e-14 * integral;
          done = true;
        }
      } else {
        double z0 = is_s ? w / src.x : src.x * w;
        if (t_n <= eps_tr) {
          QResult q = q_integral(c, src.mu, z0);
          if (q.ok) {
            double log_pref = -std::log(src.alpha) +
                              (is_s ? (c - src.mu) : -c) * std::log(src.x);
            double integral = std::exp(log_pref + q.log_q);
            sum.add(integral + 0.5 * t_n);
            trunc = 0.5 * t_n + q.rel_err * integral;
            done = true;
          }
        }
      }
    }
  }

  out.terms_used = k;
  out.value = sum.total();
  if (!done) {
    out.budget_exceeded = true;
    // best available majorant for the unsummed tail
    double t_n = src.term(k);
    double na = static_cast<double>(k) + src.a;
    if (is_f) {
      trunc = ftail.bound(src, k, t_n);
    } else {
      double q = src.alpha * src.mu - src.gamma;  // > 1
      double m2 = std::pow(na, src.gamma - src.alpha * src.mu + 1.0) / (q - 1.0);
      if (!is_s) m2 *= std::pow(src.x, -src.mu);
      trunc = t_n + m2;
      if (src.gamma < -1.0) {
        double m1 = std::pow(na, src.gamma + 1.0) / (-src.gamma - 1.0);
        trunc = std::min(trunc, t_n + m1);
      }
    }
  }
  double round_err = rounding_allowance(std::fabs(out.value), out.terms_used);
  out.abs_error_bound = trunc + round_err;
  if (out.abs_error_bound > prec.abs_tol) out.budget_exceeded = true;
  return out;
}

EvalResult eval_alternating(const TermSource& src, const Precision& prec) {
  EvalResult out;
  Neumaier sum;
  double abs_sum = 0.0;
  const double eps_tr = 0.5 * prec.abs_tol;
  const long kstar = src.k_star();

  std::array<double, kBlock> buf;
  long k = 0;
  // trailing window state
  double b1 = kInf, b2 = kInf;  // |t_{k-1}|, |t_{k-2}|
  int convex_run = 0;
  bool done = false;
  double trunc = kInf;
  double correction = 0.0;

  while (!done && k < prec.max_terms) {
    int n = static_cast<int>(std::min<long>(kBlock, prec.max_terms - k));
    src.fill(k, n, buf.data());
    for (int i = 0; i < n && !done; ++i) {
      double b = buf[i];
      double signed_t = (k % 2 == 0) ? b : -b;
      // stopping check before adding term k: remainder starts at k
      if (k >= kstar + 1 && b <= b1) {
        double plain = b;
        double bound = plain;
        if (convex_run >= 4) {
          // convex tail: midpoint estimate halves the bracket
          double next = (i + 1 < n) ? buf[i + 1] : src.term(k + 1);
          if (next <= b) {
            bound = 0.5 * (b - next) + 1e-16 * b;
            correction = 0.5 * signed_t;
          }
        }
        if (bound <= eps_tr) {
          trunc = bound;
          done = true;
          break;
        }
      }
      sum.add(signed_t);
      abs_sum += b;
      // update convexity window: diffs of |t| nonincreasing
      if (b1 < kInf && b2 < kInf) {
        double d_prev = b2 - b1;
        double d_cur = b1 - b;
        if (d_cur >= -1e-12 * b1 && d_cur <= d_prev + 1e-9 * (b2 + 1e-300))
          ++convex_run;
        else
          convex_run = 0;
      }
      b2 = b1;
      b1 = b;
      ++k;
    }
    if (!std::isfinite(sum.sum))
      throw std::overflow_error("series term overflow");
  }

  out.terms_used = k;
  out.value = sum.total() + correction;
  if (!done) {
    out.budget_exceeded = true;
    trunc = (b1 < kInf) ? b1 : kInf;  // first-omitted-term bound if decreasing
  }
  out.abs_error_bound = trunc + rounding_allowance(abs_sum, out.terms_used);
  if (out.abs_error_bound > prec.abs_tol) out.budget_exceeded = true;
  return out;
}

TermSource make_source(Family fam, double x, const SeriesParams& sp, double mu) {
  sp.validate();
  TermSource src;
  src.fam = fam;
  src.a = sp.a;
  src.gamma = sp.gamma;
  src.alpha = sp.alpha;
  src.mu = mu;
  src.x = x;
  return src;
}

void require_positive_x(double x, const char* fn) {
  if (!(x > 0.0)) throw domain_error(std::string(fn) + " requires x > 0");
}

}  // namespace

EvalResult eval_f(double x, const SeriesParams& p, const Precision& prec) {
  prec.validate();
  require_positive_x(x, "eval_f");
  return eval_positive(make_source(Family::f, x, p, 0.0), prec);
}

EvalResult eval_f_alt(double x, const SeriesParams& p, const Precision& prec) {
  prec.validate();
  require_positive_x(x, "eval_f_alt");
  return eval_alternating(make_source(Family::f_alt, x, p, 0.0), prec);
}

EvalResult eval_g(double x, const MathieuParams& p, const Precision& prec) {
  prec.validate();
  p.validate_direct();
  require_positive_x(x, "eval_g");
  return eval_positive(make_source(Family::g, x, p.base, p.mu), prec);
}

EvalResult eval_g_alt(double x, const MathieuParams& p, const Precision& prec) {
  prec.validate();
  p.validate_alternating();
  require_positive_x(x, "eval_g_alt");
  return eval_alternating(make_source(Family::g_alt, x, p.base, p.mu), prec);
}

EvalResult eval_S(double x, const MathieuParams& p, const Precision& prec) {
  prec.validate();
  p.validate_direct();
  if (!(x >= 0.0)) throw domain_error("eval_S requires x >= 0");
  return eval_positive(make_source(Family::S, x, p.base, p.mu), prec);
}

EvalResult eval_S_alt(double x, const MathieuParams& p, const Precision& prec) {
  prec.validate();
  p.validate_alternating();
  if (!(x >= 0.0)) throw domain_error("eval_S_alt requires x >= 0");
  return eval_alternating(make_source(Family::S_alt, x, p.base, p.mu), prec);
}

EvalResult eval_family(Family fam, double x, const SeriesParams& sp, double mu,
                       const Precision& prec) {
  switch (fam) {
    case Family::f: return eval_f(x, sp, prec);
    case Family::f_alt: return eval_f_alt(x, sp, prec);
    case Family::g: return eval_g(x, {sp, mu}, prec);
    case Family::g_alt: return eval_g_alt(x, {sp, mu}, prec);
    case Family::S: return eval_S(x, {sp, mu}, prec);
    case Family::S_alt: return eval_S_alt(x, {sp, mu}, prec);
  }
  throw parameter_error("unknown family");
}

}  // namespace mathieu
