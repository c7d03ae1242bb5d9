// Command-line front end: evaluation, expansions, comparison tables, sharp
// constants, and inequality verification. JSON to stdout by default, CSV of
// the row data with --csv.
//
// Exit codes: 0 ok, 1 inequality violations found, 2 parameter/domain error,
// 3 evaluation budget exceeded.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mathieu/constants.hpp"
#include "mathieu/expansion.hpp"
#include "mathieu/series.hpp"
#include "mathieu/special.hpp"
#include "output_record.hpp"

namespace {

using mathieu::Family;
using mathieu::Precision;
using mathieu::SeriesParams;
using mathieu::cli::Jv;
using mathieu::cli::OutputRecord;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitParam = 2;
constexpr int kExitBudget = 3;

double default_tolerance() {
  if (const char* env = std::getenv("MATHIEU_ASYM_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return 1e-10;
}

Family parse_family(const std::string& name) {
  if (name == "f") return Family::f;
  if (name == "falt") return Family::f_alt;
  if (name == "g") return Family::g;
  if (name == "galt") return Family::g_alt;
  if (name == "S") return Family::S;
  if (name == "Salt") return Family::S_alt;
  throw mathieu::parameter_error("unknown family '" + name +
                                 "' (expected f, falt, g, galt, S, Salt)");
}

// "lo:hi:n", log-spaced unless linear; n == 0 gives an empty grid.
std::vector<double> parse_grid(const std::string& spec, bool linear) {
  auto p1 = spec.find(':');
  auto p2 = spec.find(':', p1 == std::string::npos ? p1 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    throw mathieu::parameter_error("grid must be lo:hi:n");
  double lo = std::stod(spec.substr(0, p1));
  double hi = std::stod(spec.substr(p1 + 1, p2 - p1 - 1));
  long n = std::stol(spec.substr(p2 + 1));
  if (n < 0) throw mathieu::parameter_error("grid count must be >= 0");
  std::vector<double> g;
  if (n == 0) return g;
  if (n == 1) return {lo};
  if (!linear && !(lo > 0.0 && hi > 0.0))
    throw mathieu::parameter_error("log grid requires positive endpoints");
  g.reserve(n);
  for (long i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / (n - 1);
    g.push_back(linear ? lo + t * (hi - lo)
                       : std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
  }
  return g;
}

std::vector<double> parse_list(const std::string& spec) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t next = spec.find(',', pos);
    if (next == std::string::npos) next = spec.size();
    out.push_back(std::stod(spec.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

void emit(const OutputRecord& rec, bool csv) {
  if (csv)
    rec.write_csv(std::cout);
  else
    rec.write_json(std::cout);
}

const char* boundary_name(mathieu::BoundaryAttainment b) {
  switch (b) {
    case mathieu::BoundaryAttainment::none: return "none";
    case mathieu::BoundaryAttainment::x_to_0: return "x_to_0";
    case mathieu::BoundaryAttainment::x_to_inf: return "x_to_inf";
  }
  return "?";
}

// ---------------------------------------------------------------------------

struct Options {
  bool csv = false;
  double tol = default_tolerance();

  // shared numeric flags
  double s = 0, a = 1, gam = 0, alp = 1, mu = 0, x = 0, shift = 0;
  bool alt = false, linear = false, classical = false;
  bool have_mu = false, have_at = false, have_n = false;
  std::string family, grid, kind, ineq, mu_list_s;
  int terms = 20, n_terms = -1;
  double upper = 0, lower = 0, p_shift = 0, q_shift = 0;
};

int run_zeta(const Options& o) {
  OutputRecord rec;
  rec.command = "zeta";
  rec.inputs.set("s", o.s).set("a", o.a).set("alt", o.alt);
  mathieu::detail::ZetaEval z = o.alt
      ? mathieu::detail::alt_hurwitz_zeta_eval(o.s, o.a)
      : mathieu::detail::hurwitz_zeta_eval(o.s, o.a);
  rec.summary.set("value", z.value).set("err_estimate", z.err_estimate);
  emit(rec, o.csv);
  return kExitOk;
}

int run_eval(const Options& o) {
  Family fam = parse_family(o.family);
  bool needs_mu = fam != Family::f && fam != Family::f_alt;
  if (needs_mu && !o.have_mu)
    throw mathieu::parameter_error("--mu is required for families g, galt, S, Salt");
  SeriesParams sp{o.a, o.gam, o.alp};
  Precision prec;
  prec.abs_tol = o.tol;
  mathieu::EvalResult r = mathieu::eval_family(fam, o.x, sp, o.mu, prec);

  OutputRecord rec;
  rec.command = "eval";
  rec.inputs.set("family", o.family).set("x", o.x).set("a", o.a)
      .set("gamma", o.gam).set("alpha", o.alp);
  if (needs_mu) rec.inputs.set("mu", o.mu);
  rec.inputs.set("tol", o.tol);
  rec.summary.set("value", r.value)
      .set("abs_error_bound", r.abs_error_bound)
      .set("terms_used", static_cast<long long>(r.terms_used))
      .set("budget_exceeded", r.budget_exceeded);
  emit(rec, o.csv);
  return r.budget_exceeded ? kExitBudget : kExitOk;
}

mathieu::Expansion make_expansion(const Options& o, Family fam) {
  SeriesParams sp{o.a, o.gam, o.alp};
  switch (fam) {
    case Family::f: return mathieu::expand_f(sp, o.terms);
    case Family::f_alt: return mathieu::expand_f_alt(sp, o.terms);
    case Family::g: return mathieu::expand_g({sp, o.mu}, o.terms);
    case Family::g_alt: return mathieu::expand_g_alt({sp, o.mu}, o.terms);
    default:
      throw mathieu::parameter_error("expand supports families f, falt, g, galt");
  }
}

int run_expand(const Options& o) {
  Family fam = parse_family(o.family);
  bool needs_mu = fam == Family::g || fam == Family::g_alt;
  if (needs_mu && !o.have_mu)
    throw mathieu::parameter_error("--mu is required for families g, galt");
  mathieu::Expansion e = make_expansion(o, fam);

  OutputRecord rec;
  rec.command = "expand";
  rec.inputs.set("family", o.family).set("a", o.a).set("gamma", o.gam)
      .set("alpha", o.alp);
  if (needs_mu) rec.inputs.set("mu", o.mu);
  rec.inputs.set("terms", static_cast<long long>(o.terms));

  for (const auto& [k, ck] : e.terms) {
    Jv row = Jv::object();
    row.set("k", static_cast<long long>(k)).set("c_k", ck);
    rec.rows.push(row);
  }
  Jv head = Jv::object();
  if (e.head) {
    head.set("coefficient", e.head->coefficient)
        .set("exponent", e.head->exponent);
  }
  Jv logb = Jv::object();
  if (e.log_block) {
    logb.set("r", static_cast<long long>(e.log_block->r))
        .set("c_log", e.log_block->c_log)
        .set("c_const", e.log_block->c_const);
  }
  rec.summary.set("head", head).set("log_block", logb);
  rec.summary.set("validity", e.convergent ? "convergent" : "asymptotic_only");
  if (e.convergent) rec.summary.set("x_max", e.x_max);
  if (o.have_at) {
    int n = o.have_n ? o.n_terms : mathieu::optimal_truncation(e, o.x);
    rec.summary.set("at_x", o.x)
        .set("n_used", static_cast<long long>(n))
        .set("value", mathieu::eval_expansion(e, o.x, n));
  }
  emit(rec, o.csv);
  return kExitOk;
}

int run_compare(const Options& o) {
  Family fam = parse_family(o.family);
  bool needs_mu = fam == Family::g || fam == Family::g_alt;
  if (needs_mu && !o.have_mu)
    throw mathieu::parameter_error("--mu is required for families g, galt");
  std::vector<double> grid = parse_grid(o.grid, o.linear);
  SeriesParams sp{o.a, o.gam, o.alp};
  Precision prec;
  prec.abs_tol = o.tol;
  auto rows = mathieu::compare_expansion_vs_direct(fam, sp, o.mu, grid,
                                                   o.terms, prec);
  OutputRecord rec;
  rec.command = "compare";
  rec.inputs.set("family", o.family).set("a", o.a).set("gamma", o.gam)
      .set("alpha", o.alp);
  if (needs_mu) rec.inputs.set("mu", o.mu);
  rec.inputs.set("x_grid", o.grid)
      .set("terms", static_cast<long long>(o.terms))
      .set("tol", o.tol);
  double max_diff = 0.0;
  long long errors = 0;
  for (const auto& r : rows) {
    Jv row = Jv::object();
    row.set("x", r.x).set("direct", r.direct).set("expansion", r.expansion)
        .set("abs_diff", r.abs_diff).set("direct_bound", r.direct_bound)
        .set("n_used", static_cast<long long>(r.n_used)).set("error", r.error);
    rec.rows.push(row);
    if (r.error.empty())
      max_diff = std::max(max_diff, r.abs_diff);
    else
      ++errors;
  }
  rec.summary.set("rows", static_cast<long long>(rows.size()))
      .set("max_abs_diff", max_diff)
      .set("rows_with_error", errors);
  emit(rec, o.csv);
  return kExitOk;
}

int run_constants(const Options& o) {
  OutputRecord rec;
  rec.command = "constants";
  Precision prec;
  prec.abs_tol = o.tol;
  if (o.classical) {
    mathieu::ClassicalMathieuReport rep = mathieu::classical_mathieu_report(prec);
    rec.inputs.set("classical", true);
    rec.summary.set("q_sharp", rep.q_sharp).set("p_sharp", rep.p_sharp)
        .set("sup_gap", rep.sup_gap).set("inf_gap", rep.inf_gap);
    emit(rec, o.csv);
    return kExitOk;
  }
  if (o.kind.size() != 1 || std::string("ABCDEF").find(o.kind) == std::string::npos)
    throw mathieu::parameter_error("--kind must be one of A,B,C,D,E,F");
  mathieu::ConstantKind kind;
  kind.tag = static_cast<mathieu::ConstantKind::Tag>(o.kind[0] - 'A');
  kind.shift = o.shift;
  SeriesParams sp{o.a, o.gam, o.alp};
  mathieu::ConstantResult r = mathieu::compute_constant(kind, sp, prec);

  rec.inputs.set("kind", o.kind).set("shift", o.shift).set("a", o.a)
      .set("gamma", o.gam).set("alpha", o.alp);
  if (!r.finite) {
    rec.summary.set("value", "+inf").set("finite", false);
    bool strict_kind = kind.tag == mathieu::ConstantKind::Tag::A;
    rec.summary.set("reason", strict_kind ? "p >= a^alpha" : "p > a^alpha");
  } else {
    rec.summary.set("value", r.value).set("finite", true);
    if (r.value == 0.0 &&
        r.attained_at_boundary == mathieu::BoundaryAttainment::x_to_inf)
      rec.summary.set("reason", "q < a^alpha");
  }
  if (r.arg_x)
    rec.summary.set("arg_x", *r.arg_x);
  rec.summary.set("attained_at_boundary", boundary_name(r.attained_at_boundary));
  if (r.finite)
    rec.summary.set("bracket_lo", r.bracket_lo).set("bracket_hi", r.bracket_hi);
  emit(rec, o.csv);
  return kExitOk;
}

int run_verify(const Options& o) {
  SeriesParams sp{o.a, o.gam, o.alp};
  std::vector<double> mu_list =
      o.mu_list_s.empty() ? std::vector<double>{} : parse_list(o.mu_list_s);
  std::vector<double> grid =
      o.grid.empty() ? std::vector<double>{} : parse_grid(o.grid, o.linear);
  Precision prec;
  prec.abs_tol = o.tol;

  mathieu::VerificationReport rep;
  if (o.ineq == "n2")
    rep = mathieu::verify_inequality_n2(sp, o.upper, o.lower, o.p_shift,
                                        o.q_shift, mu_list, grid, prec);
  else if (o.ineq == "n3")
    rep = mathieu::verify_inequality_n3(sp, o.upper, o.lower, o.p_shift,
                                        o.q_shift, mu_list, grid, prec);
  else if (o.ineq == "n1")
    rep = mathieu::verify_inequality_n1(sp, o.upper, o.lower, o.p_shift,
                                        o.q_shift, mu_list, grid, prec);
  else
    throw mathieu::parameter_error("--ineq must be n1, n2 or n3");

  OutputRecord rec;
  rec.command = "verify";
  rec.inputs.set("ineq", o.ineq).set("a", o.a).set("gamma", o.gam)
      .set("alpha", o.alp).set("upper", o.upper).set("lower", o.lower)
      .set("p", o.p_shift).set("q", o.q_shift);
  for (const auto& r : rep.rows) {
    Jv row = Jv::object();
    row.set("mu", r.mu).set("x", r.x).set("lhs", r.lhs).set("middle", r.middle)
        .set("rhs", r.rhs).set("slack_low", r.slack_low)
        .set("slack_high", r.slack_high);
    rec.rows.push(row);
  }
  Jv viol = Jv::array();
  for (int idx : rep.violations) viol.push(static_cast<long long>(idx));
  rec.summary.set("min_slack", rep.min_slack)
      .set("violations", viol)
      .set("strictness_observed", rep.strictness_observed);
  emit(rec, o.csv);
  return rep.violations.empty() ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"generalized Mathieu series: evaluation, expansions, sharp constants"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--csv", o.csv, "emit rows as CSV instead of JSON");
    sub->add_option("--tol", o.tol, "target absolute tolerance");
  };
  auto add_params = [&](CLI::App* sub, bool need) {
    auto* oa = sub->add_option("--a", o.a, "offset a > 0");
    auto* og = sub->add_option("--gamma", o.gam, "power weight gamma");
    auto* ol = sub->add_option("--alpha", o.alp, "exponent alpha > 0");
    if (need) { oa->required(); og->required(); ol->required(); }
  };

  auto* c_zeta = app.add_subcommand("zeta", "Hurwitz / alternating zeta");
  c_zeta->add_option("--s", o.s)->required();
  c_zeta->add_option("--a", o.a)->required();
  c_zeta->add_flag("--alt", o.alt, "alternating zeta");
  add_common(c_zeta);

  auto* c_eval = app.add_subcommand("eval", "evaluate a series family");
  c_eval->add_option("--family", o.family)->required();
  c_eval->add_option("--x", o.x)->required();
  add_params(c_eval, true);
  c_eval->add_option("--mu", o.mu)->each([&](const std::string&) { o.have_mu = true; });
  add_common(c_eval);

  auto* c_expand = app.add_subcommand("expand", "small-x expansion coefficients");
  c_expand->add_option("--family", o.family)->required();
  add_params(c_expand, true);
  c_expand->add_option("--mu", o.mu)->each([&](const std::string&) { o.have_mu = true; });
  c_expand->add_option("--terms", o.terms)->required();
  c_expand->add_option("--at", o.x)->each([&](const std::string&) { o.have_at = true; });
  c_expand->add_option("--n", o.n_terms)->each([&](const std::string&) { o.have_n = true; });
  add_common(c_expand);

  auto* c_cmp = app.add_subcommand("compare", "expansion vs direct evaluation");
  c_cmp->add_option("--family", o.family)->required();
  add_params(c_cmp, true);
  c_cmp->add_option("--mu", o.mu)->each([&](const std::string&) { o.have_mu = true; });
  c_cmp->add_option("--x-grid", o.grid, "lo:hi:n (log-spaced)")->required();
  c_cmp->add_flag("--linear", o.linear, "linear grid spacing");
  c_cmp->add_option("--terms", o.terms)->required();
  add_common(c_cmp);

  auto* c_const = app.add_subcommand("constants", "sharp constants A..F");
  c_const->add_option("--kind", o.kind, "A|B|C|D|E|F");
  c_const->add_option("--shift", o.shift, "the p or q shift");
  add_params(c_const, false);
  c_const->add_flag("--classical", o.classical,
                    "classical Mathieu sharp constants");
  add_common(c_const);

  auto* c_verify = app.add_subcommand("verify", "two-sided inequality check");
  c_verify->add_option("--ineq", o.ineq, "n1|n2|n3")->required();
  add_params(c_verify, true);
  c_verify->add_option("--upper", o.upper, "upper-side constant (A, D or C)")->required();
  c_verify->add_option("--lower", o.lower, "lower-side constant (B, E or F)")->required();
  c_verify->add_option("--p", o.p_shift, "upper-side shift");
  c_verify->add_option("--q", o.q_shift, "lower-side shift");
  c_verify->add_option("--mu-list", o.mu_list_s, "comma-separated mu values");
  c_verify->add_option("--x-grid", o.grid, "lo:hi:n");
  c_verify->add_flag("--linear", o.linear);
  add_common(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParam;
  }

  try {
    if (c_zeta->parsed()) return run_zeta(o);
    if (c_eval->parsed()) return run_eval(o);
    if (c_expand->parsed()) return run_expand(o);
    if (c_cmp->parsed()) return run_compare(o);
    if (c_const->parsed()) return run_constants(o);
    if (c_verify->parsed()) return run_verify(o);
  } catch (const mathieu::pole_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParam;
  } catch (const mathieu::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParam;
  } catch (const mathieu::parameter_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParam;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParam;
  }
  return kExitOk;
}
