#pragma once

// 4-wide double-precision exp/log for AVX2+FMA, after the classic rational
// approximations (Cody-Waite reduction for exp, mantissa/exponent split with
// a degree-5/5 rational for log). Accuracy is a couple of ulp, verified
// against the scalar libm in the kernel equivalence tests.

#include <immintrin.h>

namespace mathieu::kernels::avx2 {

inline __m256d poly_P_exp(__m256d z) {
  const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
  const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
  const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
  return _mm256_fmadd_pd(_mm256_fmadd_pd(p0, z, p1), z, p2);
}

inline __m256d poly_Q_exp(__m256d z) {
  const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
  const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
  const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
  const __m256d q3 = _mm256_set1_pd(2.00000000000000000005e0);
  return _mm256_fmadd_pd(
      _mm256_fmadd_pd(_mm256_fmadd_pd(q0, z, q1), z, q2), z, q3);
}

inline __m256d vexp4(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
  const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);

  __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                              _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, c1, x);
  r = _mm256_fnmadd_pd(n, c2, r);

  __m256d z = _mm256_mul_pd(r, r);
  __m256d px = _mm256_mul_pd(r, poly_P_exp(z));
  __m256d qx = poly_Q_exp(z);
  __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
  e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

  // scale by 2^n via the exponent field
  __m128i n32 = _mm256_cvtpd_epi32(n);
  __m256i n64 = _mm256_cvtepi32_epi64(n32);
  __m256i pw = _mm256_slli_epi64(
      _mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  e = _mm256_mul_pd(e, _mm256_castsi256_pd(pw));

  // saturate out-of-range arguments
  __m256d lo = _mm256_cmp_pd(x, _mm256_set1_pd(-708.0), _CMP_LT_OQ);
  __m256d hi = _mm256_cmp_pd(x, _mm256_set1_pd(709.0), _CMP_GT_OQ);
  e = _mm256_andnot_pd(lo, e);
  e = _mm256_blendv_pd(e, _mm256_set1_pd(1.0 / 0.0), hi);
  return e;
}

inline __m256d poly_P_log(__m256d x) {
  const double c[6] = {1.01875663804580931796e-4, 4.97494994976747001425e-1,
                       4.70579119878881725854e0,  1.44989225341610930846e1,
                       1.79368678507819816313e1,  7.70838733755885391666e0};
  __m256d p = _mm256_set1_pd(c[0]);
  for (int i = 1; i < 6; ++i)
    p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(c[i]));
  return p;
}

inline __m256d poly_Q_log(__m256d x) {
  const double c[5] = {1.12873587189167450590e1, 4.52279145837532221105e1,
                       8.29875266912776603211e1, 7.11544750618563894466e1,
                       2.31251620126765340583e1};
  __m256d q = _mm256_add_pd(x, _mm256_set1_pd(c[0]));  // implicit leading 1
  for (int i = 1; i < 5; ++i)
    q = _mm256_fmadd_pd(q, x, _mm256_set1_pd(c[i]));
  return q;
}

// Requires x > 0, finite, normal.
inline __m256d vlog4(__m256d x) {
  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i half_bits = _mm256_set1_epi64x(0x3FE0000000000000LL);
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);  // 2^52

  __m256i bits = _mm256_castpd_si256(x);
  __m256i biased = _mm256_srli_epi64(bits, 52);  // in [1, 2046]
  __m256d e = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_add_epi64(biased, magic)),
      _mm256_set1_pd(4503599627370496.0 + 1022.0));
  __m256d m = _mm256_castsi256_pd(
      _mm256_or_si256(_mm256_and_si256(bits, mant_mask), half_bits));

  // bring m into [sqrt(1/2), sqrt(2))
  __m256d small = _mm256_cmp_pd(
      m, _mm256_set1_pd(0.70710678118654752440), _CMP_LT_OQ);
  e = _mm256_sub_pd(e, _mm256_and_pd(small, _mm256_set1_pd(1.0)));
  m = _mm256_add_pd(m, _mm256_and_pd(small, m));
  __m256d xm = _mm256_sub_pd(m, _mm256_set1_pd(1.0));

  __m256d z = _mm256_mul_pd(xm, xm);
  __m256d y = _mm256_mul_pd(
      _mm256_mul_pd(xm, z),
      _mm256_div_pd(poly_P_log(xm), poly_Q_log(xm)));
  y = _mm256_fnmadd_pd(e, _mm256_set1_pd(2.121944400546905827679e-4), y);
  y = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, y);
  __m256d r = _mm256_add_pd(xm, y);
  return _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), r);
}

}  // namespace mathieu::kernels::avx2
