#pragma once

// Term-block kernels for the series inner loops. The scalar variants are the
// reference; the AVX2 variants are selected at runtime when the CPU supports
// them (override with MATHIEU_SIMD=scalar|avx2|auto). Both fill a buffer of
// consecutive terms; accumulation stays with the caller.

namespace mathieu::kernels {

// out[i] = (k0+i+a)^gamma * exp(-((k0+i+a)^alpha) * x),  i in [0, n)
using ExpTermsFn = void (*)(long k0, int n, double a, double gamma,
                            double alpha, double x, double* out);

// out[i] = (k0+i+a)^gamma / D_i^mu with
//   D_i = (k0+i+a)^alpha + x      when s_form
//   D_i = x*(k0+i+a)^alpha + 1    otherwise (g-form)
using RationalTermsFn = void (*)(long k0, int n, double a, double gamma,
                                 double alpha, double mu, double x,
                                 bool s_form, double* out);

struct Kernels {
  ExpTermsFn exp_terms;
  RationalTermsFn rational_terms;
  const char* name;
};

const Kernels& scalar_kernels();
const Kernels& active();

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_available();
const Kernels& avx2_kernels();
#endif

}  // namespace mathieu::kernels
