#pragma once

// Certified direct evaluation of the six series families:
//   f(x)  = sum (k+a)^gamma exp(-(k+a)^alpha x)            x > 0
//   g(x)  = sum (k+a)^gamma / (x(k+a)^alpha + 1)^mu        x > 0
//   S(x)  = sum (k+a)^gamma / ((k+a)^alpha + x)^mu         x >= 0
// and their alternating variants. Each returns a value together with a
// rigorous absolute-error bound (truncation tail + rounding allowance).

#include "mathieu/types.hpp"

namespace mathieu {

EvalResult eval_f(double x, const SeriesParams& p, const Precision& prec = {});
EvalResult eval_f_alt(double x, const SeriesParams& p, const Precision& prec = {});
EvalResult eval_g(double x, const MathieuParams& p, const Precision& prec = {});
EvalResult eval_g_alt(double x, const MathieuParams& p, const Precision& prec = {});
EvalResult eval_S(double x, const MathieuParams& p, const Precision& prec = {});
EvalResult eval_S_alt(double x, const MathieuParams& p, const Precision& prec = {});

// Uniform entry point; mu ignored for the f families.
EvalResult eval_family(Family fam, double x, const SeriesParams& sp, double mu,
                       const Precision& prec = {});

}  // namespace mathieu
