#pragma once

// Small-x asymptotic expansions of the four x>0 families:
//   f  ~ head + sum (-1)^k/k! zeta(-alpha k - gamma, a) x^k
//   g  ~ head + sum (-1)^k/k! Gamma(mu+k)/Gamma(mu) zeta(-alpha k - gamma, a) x^k
// (alternating variants carry the alternating zeta and have no head).
// When -(gamma+1)/alpha is a nonnegative integer r the singular head and the
// x^r power term collide into an x^r(ln x)-block.

#include <optional>
#include <string>
#include <vector>

#include "mathieu/types.hpp"

namespace mathieu {

// Relative tolerance for detecting the degenerate integer case.
inline constexpr double kDegenerateIntTol = 1e-9;

struct SingularHead {
  double exponent;     // the power -(gamma+1)/alpha of x
  double coefficient;
};

struct LogBlock {
  int r;           // = -(gamma+1)/alpha
  double c_log;    // coefficient of x^r ln x
  double c_const;  // coefficient of x^r from the bracket
};

struct Expansion {
  std::optional<SingularHead> head;
  std::optional<LogBlock> log_block;
  std::vector<std::pair<int, double>> terms;  // (k, c_k), k == r excluded
  bool convergent = false;   // false: asymptotic_only
  double x_max = 0.0;        // valid interval (0, x_max) when convergent
  Family family = Family::f;
};

Expansion expand_f(const SeriesParams& p, int k_terms);
Expansion expand_f_alt(const SeriesParams& p, int k_terms);
Expansion expand_g(const MathieuParams& p, int k_terms);
Expansion expand_g_alt(const MathieuParams& p, int k_terms);

// head(x) + log_block(x) + sum of the first n_terms series terms.
double eval_expansion(const Expansion& e, double x, int n_terms);

// Number of leading terms up to (and including) the first local minimum of
// |c_k x^k|; the whole list for convergent/decreasing tails.
int optimal_truncation(const Expansion& e, double x);

// Leading behavior of S(x) as x -> +infinity (three regimes in gamma+1).
struct SInfinityLaw {
  enum class Regime { power_head, log, constant };
  Regime regime;
  double coefficient;  // multiplies x^exponent (times ln x in the log regime)
  double exponent;
  bool has_log;
};
SInfinityLaw s_infinity_law(const MathieuParams& p);

struct CompareRow {
  double x;
  double direct;
  double direct_bound;
  double expansion;
  double abs_diff;
  int n_used;
  std::string error;  // empty on success
};
// Empirical check of the expansions against certified direct evaluation.
std::vector<CompareRow> compare_expansion_vs_direct(
    Family fam, const SeriesParams& sp, double mu,
    const std::vector<double>& x_grid, int k_terms,
    const Precision& prec = {});

}  // namespace mathieu
