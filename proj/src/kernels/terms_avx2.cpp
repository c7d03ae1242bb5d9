#if defined(__x86_64__) || defined(_M_X64)

#include "mathieu/kernels.hpp"
#include "vmath_avx2.hpp"

namespace mathieu::kernels {

namespace {

using avx2::vexp4;
using avx2::vlog4;

inline __m256d base_vec(long k0, int i, double a) {
  const __m256d ramp = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  __m256d k = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(k0 + i)), ramp);
  return _mm256_add_pd(k, _mm256_set1_pd(a));
}

// (k+a)^alpha with cheap paths for the common integer exponents.
inline __m256d pow_alpha(__m256d base, __m256d log_base, double alpha,
                         bool have_log) {
  if (alpha == 1.0) return base;
  if (alpha == 2.0) return _mm256_mul_pd(base, base);
  (void)have_log;
  return vexp4(_mm256_mul_pd(_mm256_set1_pd(alpha), log_base));
}

void exp_terms_avx2(long k0, int n, double a, double gamma, double alpha,
                    double x, double* out) {
  const bool simple_gamma = (gamma == 0.0 || gamma == 1.0 || gamma == 2.0);
  const bool simple_alpha = (alpha == 1.0 || alpha == 2.0);
  const bool need_log = !simple_gamma || !simple_alpha;
  const __m256d xv = _mm256_set1_pd(x);
  const __m256d gv = _mm256_set1_pd(gamma);

  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d base = base_vec(k0, i, a);
    __m256d lg = need_log ? vlog4(base) : _mm256_setzero_pd();
    __m256d u = _mm256_mul_pd(pow_alpha(base, lg, alpha, need_log), xv);
    __m256d t;
    if (simple_gamma) {
      t = vexp4(_mm256_sub_pd(_mm256_setzero_pd(), u));
      if (gamma == 1.0) t = _mm256_mul_pd(t, base);
      if (gamma == 2.0) t = _mm256_mul_pd(t, _mm256_mul_pd(base, base));
    } else {
      t = vexp4(_mm256_fmsub_pd(gv, lg, u));
    }
    _mm256_storeu_pd(out + i, t);
  }
  if (i < n) scalar_kernels().exp_terms(k0 + i, n - i, a, gamma, alpha, x, out + i);
}

void rational_terms_avx2(long k0, int n, double a, double gamma, double alpha,
                         double mu, double x, bool s_form, double* out) {
  const bool simple_gamma = (gamma == 0.0 || gamma == 1.0 || gamma == 2.0);
  const bool simple_alpha = (alpha == 1.0 || alpha == 2.0);
  const bool int_mu = (mu == 1.0 || mu == 2.0 || mu == 3.0 || mu == 4.0);
  const bool need_log = !simple_gamma || !simple_alpha;
  const __m256d xv = _mm256_set1_pd(x);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d gv = _mm256_set1_pd(gamma);
  const __m256d mv = _mm256_set1_pd(mu);

  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d base = base_vec(k0, i, a);
    __m256d lg = need_log ? vlog4(base) : _mm256_setzero_pd();
    __m256d w = pow_alpha(base, lg, alpha, need_log);
    __m256d d = s_form ? _mm256_add_pd(w, xv) : _mm256_fmadd_pd(xv, w, one);
    __m256d t;
    if (int_mu && simple_gamma) {
      __m256d num = one;
      if (gamma == 1.0) num = base;
      if (gamma == 2.0) num = _mm256_mul_pd(base, base);
      __m256d dp = d;
      if (mu >= 2.0) dp = _mm256_mul_pd(dp, d);
      if (mu >= 3.0) dp = _mm256_mul_pd(dp, d);
      if (mu >= 4.0) dp = _mm256_mul_pd(dp, d);
      t = _mm256_div_pd(num, dp);
    } else {
      __m256d arg = _mm256_fnmadd_pd(mv, vlog4(d), _mm256_mul_pd(gv, lg));
      t = vexp4(arg);
    }
    _mm256_storeu_pd(out + i, t);
  }
  if (i < n)
    scalar_kernels().rational_terms(k0 + i, n - i, a, gamma, alpha, mu, x,
                                    s_form, out + i);
}

}  // namespace

bool avx2_available() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const Kernels& avx2_kernels() {
  static const Kernels k{exp_terms_avx2, rational_terms_avx2, "avx2"};
  return k;
}

}  // namespace mathieu::kernels

#endif  // x86_64
