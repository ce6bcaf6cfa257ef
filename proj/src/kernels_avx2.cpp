// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and is only entered after the dispatcher has confirmed CPU
// support, so it may use the intrinsics unconditionally.

#include "svi/kernels.hpp"

#include <cmath>
#include <immintrin.h>

namespace svi::kernels::detail {

namespace {

// ---- small helpers -------------------------------------------------------

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// Integral doubles with |v| < 2^51 <-> int64, via the 1.5*2^52 bias trick.
inline __m256i to_int64(__m256d v) {
  const __m256d bias = _mm256_set1_pd(0x1.8p52);
  return _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(v, bias)),
                          _mm256_castpd_si256(bias));
}

// ---- exp(x) for x in [-708, 709], Cephes-style rational approximation ----
// Constants stay function-local so this TU has no AVX static initializers;
// nothing here may execute before the CPU check in the dispatcher.

inline __m256d exp_pd(__m256d x) {
  const __m256d kLog2E = _mm256_set1_pd(1.4426950408889634073599);
  const __m256d kC1 = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d kC2 = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d kExpP0 = _mm256_set1_pd(1.26177193074810590878e-4);
  const __m256d kExpP1 = _mm256_set1_pd(3.02994407707441961300e-2);
  const __m256d kExpP2 = _mm256_set1_pd(9.99999999999999999910e-1);
  const __m256d kExpQ0 = _mm256_set1_pd(3.00198505138664455042e-6);
  const __m256d kExpQ1 = _mm256_set1_pd(2.52448340349684104192e-3);
  const __m256d kExpQ2 = _mm256_set1_pd(2.27265548208155028766e-1);
  const __m256d kExpQ3 = _mm256_set1_pd(2.00000000000000000005e0);

  x = _mm256_max_pd(x, _mm256_set1_pd(-708.0));
  x = _mm256_min_pd(x, _mm256_set1_pd(709.0));

  __m256d n = _mm256_round_pd(_mm256_mul_pd(x, kLog2E),
                              _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  x = _mm256_fnmadd_pd(n, kC1, x);
  x = _mm256_fnmadd_pd(n, kC2, x);

  const __m256d xx = _mm256_mul_pd(x, x);
  __m256d px = _mm256_fmadd_pd(kExpP0, xx, kExpP1);
  px = _mm256_fmadd_pd(px, xx, kExpP2);
  px = _mm256_mul_pd(px, x);
  __m256d qx = _mm256_fmadd_pd(kExpQ0, xx, kExpQ1);
  qx = _mm256_fmadd_pd(qx, xx, kExpQ2);
  qx = _mm256_fmadd_pd(qx, xx, kExpQ3);
  __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
  e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

  // e * 2^n with n in [-1022, 1023]: build the power of two directly.
  __m256i bits = _mm256_add_epi64(to_int64(n), _mm256_set1_epi64x(1023));
  __m256d pow2 = _mm256_castsi256_pd(_mm256_slli_epi64(bits, 52));
  return _mm256_mul_pd(e, pow2);
}

// ---- log(x) for normal positive x, Cephes-style --------------------------

inline __m256d log_pd(__m256d x) {
  const __m256d kLogP0 = _mm256_set1_pd(1.01875663804580931796e-4);
  const __m256d kLogP1 = _mm256_set1_pd(4.97494994976747001425e-1);
  const __m256d kLogP2 = _mm256_set1_pd(4.70579119878881725854e0);
  const __m256d kLogP3 = _mm256_set1_pd(1.44989225341610930846e1);
  const __m256d kLogP4 = _mm256_set1_pd(1.79368678507819816313e1);
  const __m256d kLogP5 = _mm256_set1_pd(7.70838733755885391666e0);
  const __m256d kLogQ1 = _mm256_set1_pd(1.12873587189167450590e1);
  const __m256d kLogQ2 = _mm256_set1_pd(4.52279145837532221105e1);
  const __m256d kLogQ3 = _mm256_set1_pd(8.29875266912776603211e1);
  const __m256d kLogQ4 = _mm256_set1_pd(7.11544750618563894466e1);
  const __m256d kLogQ5 = _mm256_set1_pd(2.31251620126765340583e1);

  // frexp: mantissa in [0.5, 1), integral exponent.
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i expo_bits =
      _mm256_and_si256(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x7FF));
  __m256d e = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_add_epi64(
          expo_bits, _mm256_castpd_si256(_mm256_set1_pd(0x1.8p52)))),
      _mm256_set1_pd(0x1.8p52 + 1022.0));
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
      _mm256_set1_epi64x(0x3FE0000000000000LL)));

  // If mantissa < sqrt(1/2): halve the exponent side, double the mantissa.
  const __m256d small =
      _mm256_cmp_pd(m, _mm256_set1_pd(0.70710678118654752440), _CMP_LT_OQ);
  e = _mm256_sub_pd(e, _mm256_and_pd(small, _mm256_set1_pd(1.0)));
  m = _mm256_add_pd(m, _mm256_and_pd(small, m));
  m = _mm256_sub_pd(m, _mm256_set1_pd(1.0));

  const __m256d z = _mm256_mul_pd(m, m);
  __m256d p = _mm256_fmadd_pd(kLogP0, m, kLogP1);
  p = _mm256_fmadd_pd(p, m, kLogP2);
  p = _mm256_fmadd_pd(p, m, kLogP3);
  p = _mm256_fmadd_pd(p, m, kLogP4);
  p = _mm256_fmadd_pd(p, m, kLogP5);
  __m256d q = _mm256_add_pd(m, kLogQ1);
  q = _mm256_fmadd_pd(q, m, kLogQ2);
  q = _mm256_fmadd_pd(q, m, kLogQ3);
  q = _mm256_fmadd_pd(q, m, kLogQ4);
  q = _mm256_fmadd_pd(q, m, kLogQ5);

  __m256d y = _mm256_mul_pd(_mm256_mul_pd(m, z), _mm256_div_pd(p, q));
  y = _mm256_fnmadd_pd(e, _mm256_set1_pd(2.121944400546905827679e-4), y);
  y = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, y);
  __m256d r = _mm256_add_pd(m, y);
  return _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), r);
}

// ---- kernel entry points --------------------------------------------------

double sum_avx2(const double* x, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double max_avx2(const double* x, size_t n) {
  double m = x[0];
  size_t i = 0;
  if (n >= 4) {
    __m256d acc = _mm256_loadu_pd(x);
    for (i = 4; i + 4 <= n; i += 4)
      acc = _mm256_max_pd(acc, _mm256_loadu_pd(x + i));
    m = hmax(acc);
  }
  for (; i < n; ++i) m = x[i] > m ? x[i] : m;
  return m;
}

double dot_avx2(const double* x, const double* y, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_avx2(double* y, double a, const double* x, size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void blend_avx2(double* out, const double* a, const double* b, double rho,
                size_t n) {
  const __m256d vw = _mm256_set1_pd(1.0 - rho);
  const __m256d vr = _mm256_set1_pd(rho);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_mul_pd(vw, _mm256_loadu_pd(a + i));
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(vr, _mm256_loadu_pd(b + i), va));
  }
  const double w = 1.0 - rho;
  for (; i < n; ++i) out[i] = w * a[i] + rho * b[i];
}

inline __m256d digamma_pd(__m256d x) {
  // Lift to x >= 8 with at most 8 masked steps (valid for any x > 0).
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d eight = _mm256_set1_pd(8.0);
  __m256d acc = _mm256_setzero_pd();
  for (int iter = 0; iter < 8; ++iter) {
    const __m256d need = _mm256_cmp_pd(x, eight, _CMP_LT_OQ);
    acc = _mm256_add_pd(acc, _mm256_and_pd(need, _mm256_div_pd(one, x)));
    x = _mm256_add_pd(x, _mm256_and_pd(need, one));
  }
  const __m256d w = _mm256_div_pd(one, _mm256_mul_pd(x, x));
  __m256d s = _mm256_set1_pd(1.0 / 12.0);
  s = _mm256_fmadd_pd(s, w, _mm256_set1_pd(-691.0 / 32760.0));
  s = _mm256_fmadd_pd(s, w, _mm256_set1_pd(1.0 / 132.0));
  s = _mm256_fmadd_pd(s, w, _mm256_set1_pd(-1.0 / 240.0));
  s = _mm256_fmadd_pd(s, w, _mm256_set1_pd(1.0 / 252.0));
  s = _mm256_fmadd_pd(s, w, _mm256_set1_pd(-1.0 / 120.0));
  s = _mm256_fmadd_pd(s, w, _mm256_set1_pd(1.0 / 12.0));
  s = _mm256_mul_pd(s, w);
  __m256d r = log_pd(x);
  r = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), _mm256_div_pd(one, x), r);
  r = _mm256_sub_pd(r, s);
  return _mm256_sub_pd(r, acc);
}

void digamma_avx2(const double* x, double* out, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, digamma_pd(_mm256_loadu_pd(x + i)));
  for (; i < n; ++i) out[i] = digamma_scalar(x[i]);
}

double exp_normalize_avx2(const double* logw, double* out, size_t n) {
  const double m = max_avx2(logw, n);
  const __m256d vm = _mm256_set1_pd(m);
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d e = exp_pd(_mm256_sub_pd(_mm256_loadu_pd(logw + i), vm));
    _mm256_storeu_pd(out + i, e);
    acc = _mm256_add_pd(acc, e);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    out[i] = std::exp(logw[i] - m);
    s += out[i];
  }
  const __m256d vinv = _mm256_set1_pd(1.0 / s);
  i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(out + i), vinv));
  for (; i < n; ++i) out[i] *= 1.0 / s;
  return m + std::log(s);
}

const Ops kAvx2Ops = {
    "avx2",     sum_avx2,   max_avx2,     dot_avx2,
    axpy_avx2,  blend_avx2, digamma_avx2, exp_normalize_avx2,
};

}  // namespace

const Ops* avx2_table() { return &kAvx2Ops; }

}  // namespace svi::kernels::detail
