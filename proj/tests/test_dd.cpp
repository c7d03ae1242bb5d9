#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <quadmath.h>
#include <random>

#include "mathieu/dd.hpp"

using namespace mathieu;

namespace {

double rel_vs_quad(Dd got, __float128 ref) {
  if (ref == 0) return std::fabs(got.to_double());
  return static_cast<double>(fabsq(((__float128)got.hi + got.lo - ref) / ref));
}

}  // namespace

TEST_CASE("error-free primitives") {
  auto s = dd_detail::two_sum(1.0, 1e-30);
  CHECK(s.hi == 1.0);
  CHECK(s.lo == 1e-30);
  auto p = dd_detail::two_prod(1.0 / 3.0, 1.0 / 7.0);
  __float128 exact = (__float128)(1.0 / 3.0) * (1.0 / 7.0);
  CHECK(static_cast<double>(fabsq((__float128)p.hi + p.lo - exact)) == 0.0);
}

TEST_CASE("add/mul/div accurate to ~1e-31") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_add = 0, worst_mul = 0, worst_div = 0;
  for (int i = 0; i < 20000; ++i) {
    double ah = u(rng), bh = u(rng);
    double al = u(rng) * 1e-17 * ah, bl = u(rng) * 1e-17 * bh;
    Dd A{ah, al}, B{bh, bl};
    __float128 qa = (__float128)ah + al, qb = (__float128)bh + bl;
    if (fabsq(qa + qb) > 1e-2)
      worst_add = std::max(worst_add, rel_vs_quad(A + B, qa + qb));
    worst_mul = std::max(worst_mul, rel_vs_quad(A * B, qa * qb));
    if (std::fabs(bh) > 1e-2)
      worst_div = std::max(worst_div, rel_vs_quad(A / B, qa / qb));
  }
  CHECK(worst_add < 1e-30);
  CHECK(worst_mul < 1e-30);
  CHECK(worst_div < 1e-30);
}

TEST_CASE("dd_exp across the working range") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-300.0, 300.0);
  double worst = 0;
  for (int i = 0; i < 5000; ++i) {
    double x = u(rng);
    worst = std::max(worst, rel_vs_quad(dd_exp(Dd(x)), expq((__float128)x)));
  }
  CHECK(worst < 5e-30);
  CHECK(dd_exp(Dd(0.0)).to_double() == 1.0);
}

TEST_CASE("dd_expm1 accurate near zero") {
  for (double x : {1e-20, -1e-12, 1e-8, 0.01, -0.3, 0.3}) {
    double rel = rel_vs_quad(dd_expm1(Dd(x)), expm1q((__float128)x));
    CHECK(rel < 5e-30);
  }
}

TEST_CASE("dd_log and round-trip") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-200.0, 200.0);
  double worst = 0;
  for (int i = 0; i < 5000; ++i) {
    double x = std::exp(u(rng) * 0.05);
    worst = std::max(worst, rel_vs_quad(dd_log(Dd(x)), logq((__float128)x)));
  }
  CHECK(worst < 5e-31);
  // log(exp(x)) == x
  for (double x : {0.5, -3.0, 10.0, 100.0}) {
    Dd r = dd_log(dd_exp(Dd(x)));
    CHECK(std::fabs(r.to_double() - x) < 1e-28 * std::max(1.0, std::fabs(x)));
  }
}

TEST_CASE("dd_pow with large exponents") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> base(0.05, 120.0), expo(-62.0, 62.0);
  double worst = 0;
  for (int i = 0; i < 5000; ++i) {
    double b = base(rng), y = expo(rng);
    if (std::fabs(y * std::log(b)) > 650.0) continue;
    worst = std::max(worst,
                     rel_vs_quad(dd_pow(Dd(b), Dd(y)),
                                 powq((__float128)b, (__float128)y)));
  }
  CHECK(worst < 2e-29);
}
