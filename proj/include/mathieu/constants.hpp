#pragma once

// Sharp constants of the two-sided Mathieu-series inequalities: sup/inf over
// x > 0 of exponentially weighted envelopes of f and its alternating variant,
// plus grid verification of the inequalities themselves.
//
//   A_p = sup e^{px} x^{(gamma+1)/alpha} f(x)   (gamma+1 > 0)   B_q = inf ...
//   D_p = sup e^{px} f(x)                       (gamma+1 < 0)   E_q = inf ...
//   C_p = sup e^{px} f~(x)                      (any gamma)     F_q = inf ...

#include <optional>
#include <vector>

#include "mathieu/types.hpp"

namespace mathieu {

struct ConstantKind {
  enum class Tag { A, B, C, D, E, F } tag;
  double shift;  // the p (sup kinds) or q (inf kinds), >= 0

  void validate() const {
    if (!(shift >= 0.0)) throw parameter_error("constant shift must be >= 0");
  }
};

enum class BoundaryAttainment { none, x_to_0, x_to_inf };

struct ConstantResult {
  double value = 0.0;           // +/-inf encoded via finite=false
  bool finite = true;
  bool infinite_positive = false;
  std::optional<double> arg_x;  // interior extremizer, when one was located
  BoundaryAttainment attained_at_boundary = BoundaryAttainment::none;
  double bracket_lo = 0.0;      // numerical enclosure of the located extremum
  double bracket_hi = 0.0;
};

ConstantResult compute_constant(const ConstantKind& kind, const SeriesParams& p,
                                const Precision& prec = {});

struct VerificationRow {
  double mu, x, lhs, middle, rhs;
  // slack with the evaluation error bounds already subtracted: a row passes
  // only if both slacks are positive
  double slack_low, slack_high;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  double min_slack = 0.0;
  std::vector<int> violations;  // row indices with nonpositive slack
  bool strictness_observed = false;
};

// Eq-(n2) form: B G(mu-c)/G(mu)(q+x)^{mu-c} <= S <= A G(mu-c)/G(mu)(p+x)^{mu-c}
VerificationReport verify_inequality_n2(const SeriesParams& p, double upper_a,
                                        double lower_b, double p_shift,
                                        double q_shift,
                                        std::vector<double> mu_list,
                                        std::vector<double> x_grid,
                                        const Precision& prec = {});

// Eq-(n3) form: E/(q+x)^mu <= S <= D/(p+x)^mu   (gamma+1 < 0)
VerificationReport verify_inequality_n3(const SeriesParams& p, double upper_d,
                                        double lower_e, double p_shift,
                                        double q_shift,
                                        std::vector<double> mu_list,
                                        std::vector<double> x_grid,
                                        const Precision& prec = {});

// Eq-(n1) form: F/(q+x)^mu <= S~ <= C/(p+x)^mu
VerificationReport verify_inequality_n1(const SeriesParams& p, double upper_c,
                                        double lower_f, double p_shift,
                                        double q_shift,
                                        std::vector<double> mu_list,
                                        std::vector<double> x_grid,
                                        const Precision& prec = {});

struct ClassicalMathieuReport {
  double q_sharp;   // sup of G(x) = 1/(2 S(x,1,1,2,2)) - x, at x -> 0+
  double p_sharp;   // inf of G, the x -> infinity limit
  double sup_gap;   // q_sharp minus the largest grid value of G (>= 0)
  double inf_gap;   // smallest grid value of G minus p_sharp (>= 0)
};
ClassicalMathieuReport classical_mathieu_report(const Precision& prec = {});

// Observed relative variation of x^beta e^{shift x} f(x) over a decade grid;
// positive for every admissible parameter choice (no such weighted envelope
// is constant).
double lemma_nonconstancy_probe(const SeriesParams& p, double beta,
                                double shift);

// Default grids from the module conventions.
std::vector<double> default_mu_list(double mu_floor);
std::vector<double> default_x_grid();

}  // namespace mathieu
