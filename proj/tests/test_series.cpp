#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mathieu/series.hpp"
#include "oracles.hpp"

using namespace mathieu;

namespace {

struct Draw {
  SeriesParams sp;
  double mu_direct;  // valid for g/S
  double mu_alt;     // valid for g~/S~
  double x;
};

Draw random_draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ua(0.3, 4.0), ug(-3.0, 3.0),
      ul(0.6, 2.5), ux(0.05, 20.0), um(0.3, 3.0);
  Draw d;
  d.sp = {ua(rng), ug(rng), ul(rng)};
  double floor_direct = std::max((d.sp.gamma + 1.0) / d.sp.alpha, 0.0);
  double floor_alt = std::max(d.sp.gamma / d.sp.alpha, 0.0);
  d.mu_direct = floor_direct + um(rng);
  d.mu_alt = floor_alt + um(rng);
  d.x = ux(rng);
  return d;
}

}  // namespace

TEST_CASE("f at the geometric-series point") {
  EvalResult r = eval_f(1.0, {1.0, 0.0, 1.0});
  double ref = 1.0 / std::expm1(1.0);  // e^{-1}/(1 - e^{-1})
  CHECK(std::fabs(r.value - ref) <= r.abs_error_bound + 1e-15);
  CHECK(r.value == doctest::Approx(0.5819767068693265).epsilon(1e-12));
  CHECK(!r.budget_exceeded);
}

TEST_CASE("f index-shift identity") {
  std::mt19937_64 rng(21);
  Precision prec;
  for (int i = 0; i < 40; ++i) {
    Draw d = random_draw(rng);
    double lhs = eval_f(d.x, d.sp, prec).value -
                 std::pow(d.sp.a, d.sp.gamma) *
                     std::exp(-std::pow(d.sp.a, d.sp.alpha) * d.x);
    double rhs = eval_f(d.x, {d.sp.a + 1.0, d.sp.gamma, d.sp.alpha}, prec).value;
    CHECK(std::fabs(lhs - rhs) <=
          2.0 * prec.abs_tol + 1e-13 * (std::fabs(lhs) + 1.0));
  }
}

TEST_CASE("f against a plain high-N sum, with the classical head bound") {
  double oracle = oracles::brute_f(0.5, 1.0, 1.0, 2.0, 40);
  EvalResult r = eval_f(0.5, {1.0, 1.0, 2.0});
  CHECK(std::fabs(r.value - oracle) <= r.abs_error_bound + 1e-14);
  CHECK(0.5 * r.value < 0.5);  // x f(x) < 1/2
}

TEST_CASE("alternating f at the geometric point and large x") {
  EvalResult r = eval_f_alt(1.0, {1.0, 0.0, 1.0});
  CHECK(r.value == doctest::Approx(1.0 / (std::exp(1.0) + 1.0)).epsilon(1e-12));
  CHECK(r.value == doctest::Approx(0.2689414213699951).epsilon(1e-12));

  EvalResult big = eval_f_alt(40.0, {1.0, 0.0, 1.0});
  CHECK(big.value == doctest::Approx(std::exp(-40.0)).epsilon(0.01));
}

TEST_CASE("alternating split identity f~ = f - 2^{gamma+1} f(2^alpha x, (a+1)/2)") {
  std::mt19937_64 rng(22);
  Precision prec;
  for (int i = 0; i < 40; ++i) {
    Draw d = random_draw(rng);
    double lhs = eval_f_alt(d.x, d.sp, prec).value;
    double rhs =
        eval_f(d.x, d.sp, prec).value -
        std::pow(2.0, d.sp.gamma + 1.0) *
            eval_f(std::pow(2.0, d.sp.alpha) * d.x,
                   {0.5 * (d.sp.a + 1.0), d.sp.gamma, d.sp.alpha}, prec)
                .value;
    CHECK(std::fabs(lhs - rhs) <=
          3.0 * prec.abs_tol + 1e-13 * (std::fabs(lhs) + 1.0));
  }
}

TEST_CASE("g at a closed-form point") {
  // terms 1/(k+2)^2
  EvalResult r = eval_g(1.0, {{1.0, 0.0, 1.0}, 2.0});
  double ref = oracles::zeta_direct(2.0, 1.0) - 1.0;
  CHECK(std::fabs(r.value - ref) <= r.abs_error_bound + 1e-13);
  CHECK(r.value == doctest::Approx(0.6449340668482264).epsilon(1e-11));
}

TEST_CASE("g approaches the convergent-sum limit as x -> 0") {
  EvalResult r = eval_g(1e-6, {{1.0, -2.0, 1.0}, 2.0}, Precision{1e-9, 20'000'000});
  CHECK(std::fabs(r.value - oracles::zeta_direct(2.0, 1.0)) < 1e-4);
}

TEST_CASE("alternating g at closed-form points") {
  EvalResult r = eval_g_alt(1.0, {{1.0, 0.0, 1.0}, 1.0});
  CHECK(r.value == doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-11));

  // x -> 0 limit is the alternating-sum value 1/2
  EvalResult z = eval_g_alt(1e-8, {{1.0, 0.0, 1.0}, 1.0}, Precision{1e-7, 2'000'000});
  CHECK(std::fabs(z.value - 0.5) < 1e-6);
}

TEST_CASE("alternating split identity for g") {
  std::mt19937_64 rng(23);
  Precision prec;
  for (int i = 0; i < 40; ++i) {
    Draw d = random_draw(rng);
    // the split pieces need the direct-family mu constraint
    MathieuParams p{d.sp, d.mu_direct};
    double lhs = eval_g_alt(d.x, p, prec).value;
    double rhs =
        eval_g(d.x, p, prec).value -
        std::pow(2.0, d.sp.gamma + 1.0) *
            eval_g(std::pow(2.0, d.sp.alpha) * d.x,
                   {{0.5 * (d.sp.a + 1.0), d.sp.gamma, d.sp.alpha}, p.mu}, prec)
                .value;
    CHECK(std::fabs(lhs - rhs) <=
          3.0 * prec.abs_tol + 1e-13 * (std::fabs(lhs) + 1.0));
  }
}

TEST_CASE("S at x=0 equals the pure power sum") {
  EvalResult r = eval_S(0.0, {{1.0, 1.0, 2.0}, 2.0});
  double ref = oracles::zeta_direct(3.0, 1.0);
  CHECK(std::fabs(r.value - ref) <= r.abs_error_bound + 1e-13);
  CHECK(r.value == doctest::Approx(1.2020569031595943).epsilon(1e-11));
}

TEST_CASE("S at x=1 against a plain high-N sum") {
  double oracle = oracles::brute_S(1.0, 1.0, 1.0, 2.0, 2.0, 30'000'000);
  EvalResult r = eval_S(1.0, {{1.0, 1.0, 2.0}, 2.0});
  CHECK(std::fabs(r.value - oracle) <= r.abs_error_bound + 1e-8);
  CHECK(r.value < 0.5);  // classical upper bound 1/(2x) at x=1
  CHECK(r.value == doctest::Approx(0.39662970269967).epsilon(1e-8));
}

TEST_CASE("change of variable between S and g") {
  Precision prec;
  MathieuParams p{{1.3, 0.8, 1.6}, 2.4};
  for (double y : {0.1, 1.0, 10.0}) {
    double lhs = eval_S(y, p, prec).value;
    double rhs = std::pow(y, -p.mu) * eval_g(1.0 / y, p, prec).value;
    CHECK(std::fabs(lhs - rhs) <=
          3.0 * prec.abs_tol * std::max(1.0, std::pow(y, -p.mu)) +
              1e-12 * std::fabs(lhs));
  }
  MathieuParams q{{1.0, 1.0, 2.0}, 2.0};
  for (double x : {0.5, 2.0, 100.0}) {
    double lhs = eval_S(x, q, prec).value;
    double rhs = std::pow(x, -q.mu) * eval_g(1.0 / x, q, prec).value;
    CHECK(std::fabs(lhs - rhs) <= 3.0 * prec.abs_tol + 1e-12 * std::fabs(lhs));
  }
}

TEST_CASE("alternating S values and the large-x law") {
  EvalResult z = eval_S_alt(0.0, {{1.0, 0.0, 1.0}, 1.0});
  CHECK(z.value == doctest::Approx(std::log(2.0)).epsilon(1e-10));

  EvalResult r = eval_S_alt(1.0, {{1.0, 0.0, 1.0}, 1.0});
  CHECK(r.value == doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-10));

  EvalResult big = eval_S_alt(1e6, {{1.0, 0.0, 1.0}, 1.0}, Precision{1e-12, 20'000'000});
  CHECK(std::fabs(1e6 * big.value - 0.5) < 1e-5);
}

TEST_CASE("certified bounds are sound against stricter runs") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 25; ++i) {
    Draw d = random_draw(rng);
    Precision loose{1e-8, 20'000'000}, strict{1e-9, 20'000'000};

    auto check_pair = [](const EvalResult& r1, const EvalResult& r2) {
      if (r1.budget_exceeded || r2.budget_exceeded) return;
      CHECK(std::fabs(r1.value - r2.value) <=
            r1.abs_error_bound + r2.abs_error_bound);
    };
    check_pair(eval_f(d.x, d.sp, loose), eval_f(d.x, d.sp, strict));
    check_pair(eval_f_alt(d.x, d.sp, loose), eval_f_alt(d.x, d.sp, strict));
    MathieuParams pd{d.sp, d.mu_direct}, pa{d.sp, d.mu_alt};
    check_pair(eval_g(d.x, pd, loose), eval_g(d.x, pd, strict));
    check_pair(eval_g_alt(d.x, pa, loose), eval_g_alt(d.x, pa, strict));
    check_pair(eval_S(d.x, pd, loose), eval_S(d.x, pd, strict));
    check_pair(eval_S_alt(d.x, pa, loose), eval_S_alt(d.x, pa, strict));
  }
}

TEST_CASE("derivative of S in x matches -mu S(mu+1) at second order") {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> ua(0.7, 2.0), ug(0.5, 1.5),
      ul(1.5, 2.5), ux(0.6, 2.0), um(1.5, 3.0);
  Precision prec{3e-14, 20'000'000};
  int good = 0, total = 0;
  for (int i = 0; i < 12; ++i) {
    SeriesParams sp{ua(rng), ug(rng), ul(rng)};
    double mu = std::max((sp.gamma + 1.0) / sp.alpha, 0.0) + um(rng);
    double x = ux(rng);
    double target = -mu * eval_S(x, {sp, mu + 1.0}, prec).value;
    double errs[3];
    double hs[3] = {1e-2, 1e-3, 1e-4};
    for (int j = 0; j < 3; ++j) {
      double h = hs[j];
      double fd = (eval_S(x + h, {sp, mu}, prec).value -
                   eval_S(x - h, {sp, mu}, prec).value) /
                  (2.0 * h);
      errs[j] = std::fabs(fd - target);
    }
    // log-log slope across the h ladder
    double slope = std::log(errs[0] / errs[2]) / std::log(hs[0] / hs[2]);
    ++total;
    if (slope > 1.8 && slope < 2.2) ++good;
  }
  CHECK(good >= total - 2);  // allow a couple of noise-dominated draws
}

TEST_CASE("discrete alternating differences of S stay nonnegative") {
  Precision prec{1e-12, 20'000'000};
  const double tol = 1e3 * prec.abs_tol;
  MathieuParams p{{1.0, 1.0, 2.0}, 2.0};
  const double h = 0.25;
  for (double x : {0.2, 0.7, 1.5, 3.0, 8.0}) {
    double v[5];
    for (int j = 0; j < 5; ++j) v[j] = eval_S(x + j * h, p, prec).value;
    // forward differences
    for (int k = 1; k <= 4; ++k) {
      for (int j = 0; j + 1 < 5; ++j) v[j] = v[j + 1] - v[j];
      double signed_diff = (k % 2 == 0) ? v[0] : -v[0];
      CHECK(signed_diff >= -tol);
    }
  }
}

TEST_CASE("positivity") {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 30; ++i) {
    Draw d = random_draw(rng);
    CHECK(eval_f(d.x, d.sp).value > 0.0);
    CHECK(eval_g(d.x, {d.sp, d.mu_direct}).value > 0.0);
    CHECK(eval_S(d.x, {d.sp, d.mu_direct}).value > 0.0);
    EvalResult alt = eval_f_alt(d.x, d.sp);
    double first = std::pow(d.sp.a, d.sp.gamma) *
                   std::exp(-std::pow(d.sp.a, d.sp.alpha) * d.x);
    CHECK(alt.value > -alt.abs_error_bound);
    CHECK(alt.value < first + alt.abs_error_bound);
  }
}

TEST_CASE("budget exhaustion is a soft error with an honest bound") {
  Precision tiny{1e-10, 50};
  EvalResult r = eval_f(0.001, {1.0, 0.0, 1.0}, tiny);
  CHECK(r.budget_exceeded);
  CHECK(r.terms_used <= 50 + 2048);
  double truth = 1.0 / std::expm1(0.001);
  CHECK(std::fabs(r.value - truth) <= r.abs_error_bound);
}

TEST_CASE("domain and parameter errors") {
  CHECK_THROWS_AS(eval_f(0.0, {1.0, 0.0, 1.0}), domain_error);
  CHECK_THROWS_AS(eval_f(-1.0, {1.0, 0.0, 1.0}), domain_error);
  CHECK_THROWS_AS(eval_g(0.0, {{1.0, 0.0, 1.0}, 2.0}), domain_error);
  CHECK_THROWS_AS(eval_S(-0.5, {{1.0, 1.0, 2.0}, 2.0}), domain_error);
  CHECK_THROWS_AS(eval_f(1.0, {-1.0, 0.0, 1.0}), parameter_error);
  // mu at or below the admissibility floor
  CHECK_THROWS_AS(eval_g(1.0, {{1.0, 0.0, 1.0}, 0.5}), parameter_error);
  CHECK_THROWS_AS(eval_S(1.0, {{1.0, 1.0, 2.0}, 1.0}), parameter_error);
  CHECK_THROWS_AS(eval_S_alt(1.0, {{1.0, 2.0, 1.0}, 1.5}), parameter_error);
  CHECK_NOTHROW(eval_S_alt(1.0, {{1.0, 2.0, 1.0}, 2.5}));
}
