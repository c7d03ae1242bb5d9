#include "mathieu/expansion.hpp"

#include <cmath>
#include <limits>

#include "mathieu/series.hpp"
#include "mathieu/special.hpp"

namespace mathieu {

namespace {

// Detects -(gamma+1)/alpha in Z+ within the integer tolerance.
std::optional<int> degenerate_r(const SeriesParams& p) {
  double rneg = -(p.gamma + 1.0) / p.alpha;
  double rounded = std::round(rneg);
  if (rounded < -0.5) return std::nullopt;
  double scale = std::max(1.0, std::fabs(rneg));
  if (std::fabs(rneg - rounded) < kDegenerateIntTol * scale)
    return static_cast<int>(rounded);
  return std::nullopt;
}

void set_validity_f(Expansion& e, double alpha, bool alternating) {
  if (alpha < 1.0) {
    e.convergent = true;
    e.x_max = std::numeric_limits<double>::infinity();
  } else if (alpha == 1.0) {
    e.convergent = true;
    e.x_max = alternating ? 3.141592653589793238462643
                          : 6.283185307179586476925287;
  } else {
    e.convergent = false;
    e.x_max = 0.0;
  }
}

// Shared construction: factor_k multiplies (-1)^k zeta_k / k!.
// For the g families factor_k = Gamma(mu+k)/Gamma(mu), for f it is 1.
Expansion build(const SeriesParams& p, int k_terms, bool alternating,
                bool with_mu, double mu, const Precision& prec) {
  p.validate();
  if (k_terms < 0) throw parameter_error("expansion order K must be >= 0");

  Expansion e;
  std::optional<int> r_opt = alternating ? std::optional<int>{} : degenerate_r(p);

  double mu_factor_r = 1.0;  // Gamma(mu+r)/Gamma(mu)
  if (!alternating) {
    if (r_opt) {
      int r = *r_opt;
      if (with_mu)
        for (int i = 0; i < r; ++i) mu_factor_r *= (mu + i);
      double fact_r = 1.0;
      for (int i = 2; i <= r; ++i) fact_r *= i;
      double sign = (r % 2 == 0) ? 1.0 : -1.0;
      LogBlock lb;
      lb.r = r;
      lb.c_log = -sign * mu_factor_r / (p.alpha * fact_r);
      double bracket = digamma(r + 1.0) / p.alpha - digamma(p.a);
      if (with_mu) bracket -= digamma(mu + r) / p.alpha;
      lb.c_const = sign * mu_factor_r * bracket / fact_r;
      e.log_block = lb;
    } else {
      double c = (p.gamma + 1.0) / p.alpha;
      SingularHead h;
      h.exponent = -c;
      h.coefficient = gamma(c) / p.alpha;
      if (with_mu) h.coefficient *= gamma(mu - c) / gamma(mu);
      e.head = h;
    }
  }

  double factor = 1.0;    // Gamma(mu+k)/Gamma(mu), running
  double factorial = 1.0;  // k!
  for (int k = 0; k <= k_terms; ++k) {
    if (k > 0) {
      factorial *= k;
      if (with_mu) factor *= (mu + k - 1.0);
    }
    if (r_opt && k == *r_opt) continue;
    double s = -p.alpha * k - p.gamma;
    double z = alternating ? alt_hurwitz_zeta(s, p.a, prec)
                           : hurwitz_zeta(s, p.a, prec);
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    e.terms.emplace_back(k, sign * factor * z / factorial);
  }
  return e;
}

}  // namespace

Expansion expand_f(const SeriesParams& p, int k_terms) {
  Expansion e = build(p, k_terms, /*alternating=*/false, /*with_mu=*/false,
                      0.0, Precision{});
  e.family = Family::f;
  set_validity_f(e, p.alpha, false);
  return e;
}

Expansion expand_f_alt(const SeriesParams& p, int k_terms) {
  Expansion e = build(p, k_terms, /*alternating=*/true, /*with_mu=*/false,
                      0.0, Precision{});
  e.family = Family::f_alt;
  set_validity_f(e, p.alpha, true);
  return e;
}

Expansion expand_g(const MathieuParams& p, int k_terms) {
  p.validate_direct();
  Expansion e = build(p.base, k_terms, /*alternating=*/false, /*with_mu=*/true,
                      p.mu, Precision{});
  e.family = Family::g;
  return e;  // asymptotic_only: no convergence interval is asserted
}

Expansion expand_g_alt(const MathieuParams& p, int k_terms) {
  p.validate_alternating();
  Expansion e = build(p.base, k_terms, /*alternating=*/true, /*with_mu=*/true,
                      p.mu, Precision{});
  e.family = Family::g_alt;
  return e;
}

double eval_expansion(const Expansion& e, double x, int n_terms) {
  if (!(x > 0.0)) throw domain_error("eval_expansion requires x > 0");
  if (n_terms < 0 || n_terms > static_cast<int>(e.terms.size()))
    throw parameter_error("n_terms exceeds available expansion terms");

  // compensated accumulation, series terms first, then log block, then head
  double sum = 0.0, comp = 0.0;
  auto add = [&](double t) {
    double s = sum + t;
    comp += (std::fabs(sum) >= std::fabs(t)) ? (sum - s) + t : (t - s) + sum;
    sum = s;
  };
  for (int i = 0; i < n_terms; ++i) {
    auto [k, ck] = e.terms[i];
    add(ck * std::pow(x, static_cast<double>(k)));
  }
  if (e.log_block) {
    double xr = std::pow(x, static_cast<double>(e.log_block->r));
    add(xr * (e.log_block->c_log * std::log(x) + e.log_block->c_const));
  }
  if (e.head) add(e.head->coefficient * std::pow(x, e.head->exponent));
  return sum + comp;
}

int optimal_truncation(const Expansion& e, double x) {
  if (!(x > 0.0)) throw domain_error("optimal_truncation requires x > 0");
  int n = static_cast<int>(e.terms.size());
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    auto [k, ck] = e.terms[i];
    if (ck == 0.0) continue;  // exact zeros carry no information
    double mag = std::fabs(ck) * std::pow(x, static_cast<double>(k));
    if (mag > prev) return i;  // first growth: stop before it
    prev = mag;
  }
  return n;
}

SInfinityLaw s_infinity_law(const MathieuParams& p) {
  p.validate_direct();
  const auto& b = p.base;
  SInfinityLaw law;
  if (b.gamma + 1.0 > 0.0) {
    double c = (b.gamma + 1.0) / b.alpha;
    law.regime = SInfinityLaw::Regime::power_head;
    law.coefficient = gamma(c) * gamma(p.mu - c) / (b.alpha * gamma(p.mu));
    law.exponent = c - p.mu;
    law.has_log = false;
  } else if (b.gamma + 1.0 == 0.0) {
    law.regime = SInfinityLaw::Regime::log;
    law.coefficient = 1.0 / b.alpha;
    law.exponent = -p.mu;
    law.has_log = true;
  } else {
    law.regime = SInfinityLaw::Regime::constant;
    law.coefficient = hurwitz_zeta(-b.gamma, b.a);
    law.exponent = -p.mu;
    law.has_log = false;
  }
  return law;
}

std::vector<CompareRow> compare_expansion_vs_direct(
    Family fam, const SeriesParams& sp, double mu,
    const std::vector<double>& x_grid, int k_terms, const Precision& prec) {
  if (k_terms < 1) throw parameter_error("compare requires K >= 1");
  Expansion e;
  switch (fam) {
    case Family::f: e = expand_f(sp, k_terms); break;
    case Family::f_alt: e = expand_f_alt(sp, k_terms); break;
    case Family::g: e = expand_g({sp, mu}, k_terms); break;
    case Family::g_alt: e = expand_g_alt({sp, mu}, k_terms); break;
    default:
      throw parameter_error("compare supports families f, falt, g, galt");
  }
  std::vector<CompareRow> rows;
  rows.reserve(x_grid.size());
  for (double x : x_grid) {
    CompareRow row{};
    row.x = x;
    try {
      EvalResult direct = eval_family(fam, x, sp, mu, prec);
      row.direct = direct.value;
      row.direct_bound = direct.abs_error_bound;
      row.n_used = optimal_truncation(e, x);
      row.expansion = eval_expansion(e, x, row.n_used);
      row.abs_diff = std::fabs(row.direct - row.expansion);
      if (direct.budget_exceeded) row.error = "budget_exceeded";
    } catch (const std::exception& ex) {
      row.error = ex.what();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mathieu
