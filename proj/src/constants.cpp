#include "mathieu/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "mathieu/expansion.hpp"
#include "mathieu/series.hpp"
#include "mathieu/special.hpp"

namespace mathieu {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Envelope evaluation h(x) = e^{shift x} x^beta F(x), F in {f, f~}.
// Direct series evaluation for moderate x, the small-x expansion below
// x_switch, and the one-term large-x law where the series has collapsed.
// ---------------------------------------------------------------------------

constexpr double kXSwitch = 0.25;

struct Envelope {
  SeriesParams sp;
  bool alternating;
  double beta;
  double shift;
  Expansion small_x;
  double x_tail;  // beyond this the k=0 term dominates to ~1e-18

  Envelope(const SeriesParams& p, bool alt, double beta_, double shift_)
      : sp(p), alternating(alt), beta(beta_), shift(shift_) {
    small_x = alt ? expand_f_alt(p, 40) : expand_f(p, 40);
    double gap = std::pow(p.a + 1.0, p.alpha) - std::pow(p.a, p.alpha);
    x_tail = 45.0 / gap;
  }

  // F(x) itself (sign-carrying); err receives an absolute error estimate.
  double series_value(double x, double* err) const {
    if (x < kXSwitch) {
      int n = optimal_truncation(small_x, x);
      double v = eval_expansion(small_x, x, n);
      double omit = 1e-18;
      if (n < static_cast<int>(small_x.terms.size())) {
        auto [k, ck] = small_x.terms[n];
        omit = std::fabs(ck) * std::pow(x, k);
      } else if (!small_x.terms.empty()) {
        auto [k, ck] = small_x.terms.back();
        omit = std::fabs(ck) * std::pow(x, k);
      }
      *err = 2.0 * omit + 1e-15 * std::fabs(v);
      return v;
    }
    if (x >= x_tail) {
      double r1 = std::pow((sp.a + 1.0) / sp.a, sp.gamma) *
                  std::exp(-(std::pow(sp.a + 1.0, sp.alpha) -
                             std::pow(sp.a, sp.alpha)) * x);
      double lead = std::pow(sp.a, sp.gamma) *
                    std::exp(-std::pow(sp.a, sp.alpha) * x);
      double v = alternating ? lead * (1.0 - r1) : lead * (1.0 + r1);
      *err = lead * r1 * r1 * 2.0 + 1e-16 * std::fabs(v);
      return v;
    }
    Precision prec;
    prec.abs_tol = 1e-13;
    prec.max_terms = 5'000'000;
    EvalResult r = alternating ? eval_f_alt(x, sp, prec) : eval_f(x, sp, prec);
    *err = r.abs_error_bound;
    return r.value;
  }

  // h(x); for the f-based kinds F > 0 so the weight factors can be huge/tiny
  // without the product overflowing, computed through logs when needed.
  double value(double x, double* err) const {
    double fe;
    double fv = series_value(x, &fe);
    double logw = shift * x + beta * std::log(x);
    if (std::fabs(logw) < 600.0) {
      double w = std::exp(logw);
      *err = fe * w;
      return fv * w;
    }
    if (fv <= 0.0) {  // weight astronomically off-scale, sign from fv
      *err = kInf;
      return fv > 0.0 ? kInf : 0.0;
    }
    double lh = logw + std::log(fv);
    double h = std::exp(lh);
    *err = h * (fe / fv + 1e-15);
    return h;
  }
};

struct ScanResult {
  double best_x;
  double best_val;
  double best_err;
  int best_index;
  int n_points;
};

ScanResult scan_envelope(const Envelope& env, bool maximize, double x_lo,
                         double x_hi, int n_points) {
  ScanResult out{0.0, maximize ? -kInf : kInf, 0.0, -1, n_points};
  double lr = std::log(x_lo), step = (std::log(x_hi) - lr) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    double x = std::exp(lr + step * i);
    double err;
    double v = env.value(x, &err);
    bool better = maximize ? v > out.best_val : v < out.best_val;
    if (better) {
      out.best_x = x;
      out.best_val = v;
      out.best_err = err;
      out.best_index = i;
    }
  }
  return out;
}

// Golden-section refinement on [lo, hi] around an interior best.
void golden_refine(const Envelope& env, bool maximize, double lo, double hi,
                   double* x_best, double* v_best, double* err_best) {
  const double invphi = 0.6180339887498949;
  double a = std::log(lo), b = std::log(hi);
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double ec, ed;
  double fc = env.value(std::exp(c), &ec);
  double fd = env.value(std::exp(d), &ed);
  for (int it = 0; it < 80 && (b - a) > 1e-10; ++it) {
    bool keep_left = maximize ? (fc > fd) : (fc < fd);
    if (keep_left) {
      b = d; d = c; fd = fc; ed = ec;
      c = b - invphi * (b - a);
      fc = env.value(std::exp(c), &ec);
    } else {
      a = c; c = d; fc = fd; ec = ed;
      d = a + invphi * (b - a);
      fd = env.value(std::exp(d), &ed);
    }
  }
  double xm = std::exp(0.5 * (a + b));
  double em;
  double fm = env.value(xm, &em);
  if (maximize ? fm > *v_best : fm < *v_best) {
    *x_best = xm;
    *v_best = fm;
    *err_best = em;
  }
}

struct Candidate {
  double value;
  BoundaryAttainment where;
};

ConstantResult optimize(const Envelope& env, bool maximize,
                        const std::vector<Candidate>& boundary) {
  // scan domain: decay scale of e^{(shift-a^alpha)x} and of the k=1 term
  double a_alpha = std::pow(env.sp.a, env.sp.alpha);
  double decay = a_alpha - env.shift;
  double x_hi = env.x_tail * 1.5;
  if (decay > 0.0) x_hi = std::max(x_hi, 80.0 / decay);
  if (env.shift > 0.0) x_hi = std::min(x_hi, 650.0 / env.shift);
  x_hi = std::min(x_hi, 1e8);
  double x_lo = 1e-8;

  ScanResult scan = scan_envelope(env, maximize, x_lo, x_hi, 400);
  double x_best = scan.best_x, v_best = scan.best_val, e_best = scan.best_err;
  if (scan.best_index > 0 && scan.best_index < scan.n_points - 1) {
    double l10 = std::log(x_hi / x_lo) / (scan.n_points - 1);
    golden_refine(env, maximize, x_best * std::exp(-l10), x_best * std::exp(l10),
                  &x_best, &v_best, &e_best);
  }

  ConstantResult res;
  res.value = v_best;
  res.arg_x = x_best;
  res.attained_at_boundary = BoundaryAttainment::none;
  double err = e_best + 1e-13 * std::fabs(v_best);
  for (const auto& cand : boundary) {
    if (maximize ? cand.value > res.value : cand.value < res.value) {
      res.value = cand.value;
      res.attained_at_boundary = cand.where;
      res.arg_x.reset();
      err = 1e-13 * std::fabs(cand.value) + 1e-300;
    }
  }
  res.bracket_lo = res.value - err;
  res.bracket_hi = res.value + err;
  return res;
}

ConstantResult infinite_result() {
  ConstantResult r;
  r.value = kInf;
  r.finite = false;
  r.infinite_positive = true;
  return r;
}

ConstantResult zero_at_infinity() {
  ConstantResult r;
  r.value = 0.0;
  r.finite = true;
  r.attained_at_boundary = BoundaryAttainment::x_to_inf;
  r.bracket_lo = 0.0;
  r.bracket_hi = 0.0;
  return r;
}

// ---------------------------------------------------------------------------

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  double l = std::log(lo), step = (std::log(hi) - l) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = std::exp(l + step * i);
  return g;
}

// S~ evaluation for verification rows: certified direct when it resolves,
// otherwise the large-x route through x^{-mu} g~(1/x).
struct AltSEval {
  double value;
  double err;
};

AltSEval eval_salt_row(const SeriesParams& sp, double mu, double x,
                       const Precision& prec,
                       std::map<double, Expansion>& cache) {
  Precision direct_prec = prec;
  direct_prec.max_terms = std::min<long>(prec.max_terms, 4'000'000);
  EvalResult direct = eval_S_alt(x, {sp, mu}, direct_prec);
  if (!direct.budget_exceeded) return {direct.value, direct.abs_error_bound};
  double y = 1.0 / x;
  if (y <= 0.1) {
    auto it = cache.find(mu);
    if (it == cache.end())
      it = cache.emplace(mu, expand_g_alt({sp, mu}, 16)).first;
    const Expansion& e = it->second;
    int n = optimal_truncation(e, y);
    double g = eval_expansion(e, y, n);
    double omit = 1e-18;
    if (n < static_cast<int>(e.terms.size())) {
      auto [k, ck] = e.terms[n];
      omit = std::fabs(ck) * std::pow(y, k);
    }
    double scale = std::pow(x, -mu);
    return {g * scale, (2.0 * omit + 1e-15 * std::fabs(g)) * scale};
  }
  return {direct.value, direct.abs_error_bound};
}

enum class IneqForm { n2, n3, n1 };

VerificationReport verify_core(IneqForm form, const SeriesParams& sp,
                               double upper, double lower, double p_shift,
                               double q_shift, std::vector<double> mu_list,
                               std::vector<double> x_grid,
                               const Precision& prec) {
  sp.validate();
  if (!(p_shift >= 0.0) || !(q_shift >= 0.0))
    throw parameter_error("shifts p, q must be >= 0");
  double c = (sp.gamma + 1.0) / sp.alpha;
  if (form == IneqForm::n2 && !(sp.gamma + 1.0 > 0.0))
    throw parameter_error("n2 requires gamma+1 > 0");
  if (form == IneqForm::n3 && !(sp.gamma + 1.0 < 0.0))
    throw parameter_error("n3 requires gamma+1 < 0");

  double mu_floor = (form == IneqForm::n1)
                        ? std::max(sp.gamma / sp.alpha, 0.0)
                        : std::max(c, 0.0);
  if (mu_list.empty()) mu_list = default_mu_list(mu_floor);
  if (x_grid.empty()) x_grid = default_x_grid();
  for (double mu : mu_list)
    if (!(mu > mu_floor))
      throw parameter_error("mu below admissibility floor for this form");

  VerificationReport rep;
  rep.min_slack = kInf;
  std::map<double, Expansion> salt_cache;

  for (double mu : mu_list) {
    // constant prefactor of the bounding sides
    double pref = 1.0;
    double expo = -mu;
    if (form == IneqForm::n2) {
      pref = std::exp(log_gamma(mu - c) - log_gamma(mu));
      expo = c - mu;
    }
    for (double x : x_grid) {
      VerificationRow row{};
      row.mu = mu;
      row.x = x;
      row.lhs = lower * pref * std::pow(q_shift + x, expo);
      row.rhs = upper * pref * std::pow(p_shift + x, expo);
      double mid_err;
      if (form == IneqForm::n1) {
        AltSEval se = eval_salt_row(sp, mu, x, prec, salt_cache);
        row.middle = se.value;
        mid_err = se.err;
      } else {
        EvalResult r = eval_S(x, {sp, mu}, prec);
        row.middle = r.value;
        mid_err = r.abs_error_bound;
      }
      double side_err = 4e-16 * (std::fabs(row.lhs) + std::fabs(row.rhs));
      double comb = mid_err + side_err;
      row.slack_low = (row.middle - row.lhs) - comb;
      row.slack_high = (row.rhs - row.middle) - comb;
      rep.rows.push_back(row);
    }
  }
  for (int i = 0; i < static_cast<int>(rep.rows.size()); ++i) {
    double s = std::min(rep.rows[i].slack_low, rep.rows[i].slack_high);
    rep.min_slack = std::min(rep.min_slack, s);
    if (!(s > 0.0)) rep.violations.push_back(i);
  }
  rep.strictness_observed = rep.violations.empty() && rep.min_slack > 0.0;
  return rep;
}

}  // namespace

std::vector<double> default_mu_list(double mu_floor) {
  return {mu_floor + 0.1, mu_floor + 0.5, mu_floor + 1.0, mu_floor + 3.0,
          mu_floor + 10.0};
}

std::vector<double> default_x_grid() {
  return log_grid(1e-3, 1e3, 150);  // 25 points per decade
}

ConstantResult compute_constant(const ConstantKind& kind, const SeriesParams& p,
                                const Precision& prec) {
  prec.validate();
  kind.validate();
  p.validate();
  double a_alpha = std::pow(p.a, p.alpha);
  double c = (p.gamma + 1.0) / p.alpha;
  using Tag = ConstantKind::Tag;

  switch (kind.tag) {
    case Tag::A: {
      if (!(p.gamma + 1.0 > 0.0))
        throw parameter_error("A_p requires gamma+1 > 0");
      if (kind.shift >= a_alpha) return infinite_result();  // finite iff p < a^alpha
      Envelope env(p, false, c, kind.shift);
      return optimize(env, /*maximize=*/true,
                      {{gamma(c) / p.alpha, BoundaryAttainment::x_to_0}});
    }
    case Tag::B: {
      if (!(p.gamma + 1.0 > 0.0))
        throw parameter_error("B_q requires gamma+1 > 0");
      if (kind.shift < a_alpha) return zero_at_infinity();  // positive iff q >= a^alpha
      Envelope env(p, false, c, kind.shift);
      return optimize(env, /*maximize=*/false,
                      {{gamma(c) / p.alpha, BoundaryAttainment::x_to_0}});
    }
    case Tag::D: {
      if (!(p.gamma + 1.0 < 0.0))
        throw parameter_error("D_p requires gamma+1 < 0");
      if (kind.shift > a_alpha) return infinite_result();  // finite iff p <= a^alpha
      Envelope env(p, false, 0.0, kind.shift);
      std::vector<Candidate> cands{
          {hurwitz_zeta(-p.gamma, p.a), BoundaryAttainment::x_to_0}};
      if (kind.shift == a_alpha)
        cands.push_back({std::pow(p.a, p.gamma), BoundaryAttainment::x_to_inf});
      return optimize(env, true, cands);
    }
    case Tag::E: {
      if (!(p.gamma + 1.0 < 0.0))
        throw parameter_error("E_q requires gamma+1 < 0");
      if (kind.shift < a_alpha) return zero_at_infinity();  // positive iff q >= a^alpha
      Envelope env(p, false, 0.0, kind.shift);
      std::vector<Candidate> cands{
          {hurwitz_zeta(-p.gamma, p.a), BoundaryAttainment::x_to_0}};
      if (kind.shift == a_alpha)
        cands.push_back({std::pow(p.a, p.gamma), BoundaryAttainment::x_to_inf});
      return optimize(env, false, cands);
    }
    case Tag::C: {
      if (kind.shift > a_alpha) return infinite_result();  // +inf for p > a^alpha
      Envelope env(p, true, 0.0, kind.shift);
      std::vector<Candidate> cands{
          {alt_hurwitz_zeta(-p.gamma, p.a), BoundaryAttainment::x_to_0}};
      if (kind.shift == a_alpha)
        cands.push_back({std::pow(p.a, p.gamma), BoundaryAttainment::x_to_inf});
      return optimize(env, true, cands);
    }
    case Tag::F: {
      Envelope env(p, true, 0.0, kind.shift);
      std::vector<Candidate> cands{
          {alt_hurwitz_zeta(-p.gamma, p.a), BoundaryAttainment::x_to_0}};
      if (kind.shift < a_alpha)
        cands.push_back({0.0, BoundaryAttainment::x_to_inf});
      else if (kind.shift == a_alpha)
        cands.push_back({std::pow(p.a, p.gamma), BoundaryAttainment::x_to_inf});
      return optimize(env, false, cands);
    }
  }
  throw parameter_error("unknown constant kind");
}

VerificationReport verify_inequality_n2(const SeriesParams& p, double upper_a,
                                        double lower_b, double p_shift,
                                        double q_shift,
                                        std::vector<double> mu_list,
                                        std::vector<double> x_grid,
                                        const Precision& prec) {
  return verify_core(IneqForm::n2, p, upper_a, lower_b, p_shift, q_shift,
                     std::move(mu_list), std::move(x_grid), prec);
}

VerificationReport verify_inequality_n3(const SeriesParams& p, double upper_d,
                                        double lower_e, double p_shift,
                                        double q_shift,
                                        std::vector<double> mu_list,
                                        std::vector<double> x_grid,
                                        const Precision& prec) {
  return verify_core(IneqForm::n3, p, upper_d, lower_e, p_shift, q_shift,
                     std::move(mu_list), std::move(x_grid), prec);
}

VerificationReport verify_inequality_n1(const SeriesParams& p, double upper_c,
                                        double lower_f, double p_shift,
                                        double q_shift,
                                        std::vector<double> mu_list,
                                        std::vector<double> x_grid,
                                        const Precision& prec) {
  return verify_core(IneqForm::n1, p, upper_c, lower_f, p_shift, q_shift,
                     std::move(mu_list), std::move(x_grid), prec);
}

ClassicalMathieuReport classical_mathieu_report(const Precision& prec) {
  prec.validate();
  const SeriesParams sp{1.0, 1.0, 2.0};
  const MathieuParams mp{sp, 2.0};

  // G(x) = 1/(2 S(x)) - x; q_sharp = G(0+) = 1/(2 zeta(3)),
  // p_sharp = lim_{x->inf} G evaluated through the large-x expansion.
  double zeta3 = hurwitz_zeta(3.0, 1.0);
  ClassicalMathieuReport rep;
  rep.q_sharp = 1.0 / (2.0 * zeta3);

  Expansion ge = expand_g(mp, 8);
  auto s_large = [&](double x) {
    double y = 1.0 / x;
    int n = optimal_truncation(ge, y);
    return eval_expansion(ge, y, n) / (x * x);
  };
  auto g_of = [&](double x) {
    double s;
    if (x > 1e3) {
      s = s_large(x);
    } else {
      s = eval_S(x, mp, prec.with_tol(std::min(prec.abs_tol, 1e-12))).value;
    }
    return 1.0 / (2.0 * s) - x;
  };
  rep.p_sharp = g_of(1e6);

  double gmax = -kInf, gmin = kInf;
  for (double x : log_grid(1e-3, 1e6, 120)) {
    double g = g_of(x);
    gmax = std::max(gmax, g);
    gmin = std::min(gmin, g);
  }
  rep.sup_gap = rep.q_sharp - gmax;
  rep.inf_gap = gmin - rep.p_sharp;
  return rep;
}

double lemma_nonconstancy_probe(const SeriesParams& p, double beta,
                                double shift) {
  p.validate();
  double vmax = -kInf, vmin = kInf;
  for (double x : log_grid(0.5, 5.0, 33)) {
    EvalResult f = eval_f(x, p, Precision{1e-12, 5'000'000});
    double h = std::pow(x, beta) * std::exp(shift * x) * f.value;
    vmax = std::max(vmax, h);
    vmin = std::min(vmin, h);
  }
  double scale = std::max({std::fabs(vmax), std::fabs(vmin), 1e-300});
  return (vmax - vmin) / scale;
}

}  // namespace mathieu
