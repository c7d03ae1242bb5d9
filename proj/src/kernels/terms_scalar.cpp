#include <cmath>

#include "mathieu/kernels.hpp"

namespace mathieu::kernels {

namespace {

void exp_terms_scalar(long k0, int n, double a, double gamma, double alpha,
                      double x, double* out) {
  for (int i = 0; i < n; ++i) {
    double base = static_cast<double>(k0 + i) + a;
    double u = std::pow(base, alpha) * x;
    out[i] = std::pow(base, gamma) * std::exp(-u);
  }
}

void rational_terms_scalar(long k0, int n, double a, double gamma,
                           double alpha, double mu, double x, bool s_form,
                           double* out) {
  for (int i = 0; i < n; ++i) {
    double base = static_cast<double>(k0 + i) + a;
    double w = std::pow(base, alpha);
    double d = s_form ? w + x : x * w + 1.0;
    out[i] = std::pow(base, gamma) * std::pow(d, -mu);
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{exp_terms_scalar, rational_terms_scalar, "scalar"};
  return k;
}

}  // namespace mathieu::kernels
