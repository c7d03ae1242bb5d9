#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mathieu {

// Thrown when an argument lies outside a function's mathematical domain
// (nonpositive offsets, x out of range, poles).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when evaluating at (or within the guard band of) a pole.
class pole_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Thrown when structural parameter constraints are violated
// (mu below its admissibility threshold, wrong constant kind for gamma, ...).
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Precision {
  double abs_tol = 1e-10;     // target absolute error
  long max_terms = 20'000'000;  // summation cutoff

  void validate() const {
    if (!(abs_tol > 0.0)) throw parameter_error("Precision.abs_tol must be > 0");
    if (max_terms < 1) throw parameter_error("Precision.max_terms must be >= 1");
  }

  Precision with_tol(double tol) const {
    Precision p = *this;
    p.abs_tol = tol;
    return p;
  }
};

struct EvalResult {
  double value = 0.0;
  double abs_error_bound = 0.0;
  long terms_used = 0;
  // Soft failure: max_terms hit (or binary64 cannot reach abs_tol); value and
  // abs_error_bound are still honest.
  bool budget_exceeded = false;
};

// Parameters (a, gamma, alpha) of the exponential series families.
struct SeriesParams {
  double a;
  double gamma;
  double alpha;

  void validate() const {
    if (!(a > 0.0)) throw parameter_error("SeriesParams.a must be > 0");
    if (!(alpha > 0.0)) throw parameter_error("SeriesParams.alpha must be > 0");
  }
};

// SeriesParams plus the exponent mu of the Mathieu-type families.
struct MathieuParams {
  SeriesParams base;
  double mu;

  // mu > max{(gamma+1)/alpha; 0}, required by g and S.
  double mu_floor_direct() const {
    double c = (base.gamma + 1.0) / base.alpha;
    return c > 0.0 ? c : 0.0;
  }
  // mu > max{gamma/alpha; 0}, required by the alternating g~ and S~.
  double mu_floor_alternating() const {
    double c = base.gamma / base.alpha;
    return c > 0.0 ? c : 0.0;
  }

  void validate_direct() const {
    base.validate();
    if (!(mu > mu_floor_direct()))
      throw parameter_error("mu must exceed max{(gamma+1)/alpha, 0}");
  }
  void validate_alternating() const {
    base.validate();
    if (!(mu > mu_floor_alternating()))
      throw parameter_error("mu must exceed max{gamma/alpha, 0}");
  }
};

enum class Family : std::uint8_t { f, f_alt, g, g_alt, S, S_alt };

inline bool family_is_alternating(Family f) {
  return f == Family::f_alt || f == Family::g_alt || f == Family::S_alt;
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::f: return "f";
    case Family::f_alt: return "falt";
    case Family::g: return "g";
    case Family::g_alt: return "galt";
    case Family::S: return "S";
    case Family::S_alt: return "Salt";
  }
  return "?";
}

}  // namespace mathieu
