// AVX2+FMA variants.  This translation unit is the only one compiled with
// -mavx2 -mfma; it must be reached only through the dispatcher.

#include <cmath>
#include <immintrin.h>
#include <limits>

#include "kernels_internal.hpp"

namespace heatcoeff::kernels::detail {

namespace {

// Cephes-style exp for 4 doubles: n = round(x/ln2), r = x - n*ln2 in two
// pieces, then the 6th-order Pade form e^r = 1 + 2*px/(q - px) with
// px = r*P(r^2), q = Q(r^2).  About 1 ulp over the reduced range.
inline __m256d exp4d(__m256d x) {
  const __m256d kLog2E = _mm256_set1_pd(1.4426950408889634073599);
  const __m256d kC1 = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d kC2 = _mm256_set1_pd(1.42860682030941723212e-6);

  const __m256d fn = _mm256_floor_pd(_mm256_fmadd_pd(kLog2E, x, _mm256_set1_pd(0.5)));
  __m256d r = _mm256_fnmadd_pd(fn, kC1, x);
  r = _mm256_fnmadd_pd(fn, kC2, r);
  const __m256d rr = _mm256_mul_pd(r, r);

  __m256d px = _mm256_set1_pd(1.26177193074810590878e-4);
  px = _mm256_fmadd_pd(px, rr, _mm256_set1_pd(3.02994407707441961300e-2));
  px = _mm256_fmadd_pd(px, rr, _mm256_set1_pd(9.99999999999999999910e-1));
  px = _mm256_mul_pd(px, r);

  __m256d qx = _mm256_set1_pd(3.00198505138664455042e-6);
  qx = _mm256_fmadd_pd(qx, rr, _mm256_set1_pd(2.52448340349684104192e-3));
  qx = _mm256_fmadd_pd(qx, rr, _mm256_set1_pd(2.27265548208155028766e-1));
  qx = _mm256_fmadd_pd(qx, rr, _mm256_set1_pd(2.00000000000000000005e0));

  const __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
  __m256d res = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

  // Scale by 2^n through the exponent bits.
  const __m128i n32 = _mm256_cvtpd_epi32(fn);
  __m256i n64 = _mm256_cvtepi32_epi64(n32);
  n64 = _mm256_add_epi64(n64, _mm256_set1_epi64x(1023));
  n64 = _mm256_slli_epi64(n64, 52);
  res = _mm256_mul_pd(res, _mm256_castsi256_pd(n64));

  // Flush the under/overflow lanes (the scaling bits are garbage there).
  res = _mm256_blendv_pd(res, _mm256_setzero_pd(), _mm256_cmp_pd(x, _mm256_set1_pd(-708.0), _CMP_LT_OQ));
  res = _mm256_blendv_pd(res, _mm256_set1_pd(std::numeric_limits<double>::infinity()),
                         _mm256_cmp_pd(x, _mm256_set1_pd(709.0), _CMP_GT_OQ));
  return res;
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace

double exp_dot_avx2(const double* w, const double* s, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), exp4d(_mm256_loadu_pd(s + i)), acc);
  double total = hsum(acc);
  for (; i < n; ++i) total += w[i] * std::exp(s[i]);
  return total;
}

void horner_batch_avx2(const double* c, std::size_t nc, const double* x, double* out, std::size_t n) {
  if (nc == 0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    __m256d r = _mm256_set1_pd(c[nc - 1]);
    for (std::size_t j = nc - 1; j-- > 0;) r = _mm256_fmadd_pd(r, xv, _mm256_set1_pd(c[j]));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) {
    double r = c[nc - 1];
    for (std::size_t j = nc - 1; j-- > 0;) r = r * x[i] + c[j];
    out[i] = r;
  }
}

void march_boundary_avx2(const MarchGrid& g, const double* k2, MarchBoundary* out, std::size_t nk) {
  const std::size_t n = g.intervals();
  const __m256d thresh = _mm256_set1_pd(kRescaleThreshold);
  std::size_t lane = 0;
  for (; lane + 4 <= nk; lane += 4) {
    const __m256d k2v = _mm256_loadu_pd(k2 + lane);
    __m256d u = _mm256_set1_pd(1.0);
    __m256d A = _mm256_setzero_pd();
    __m256d C = _mm256_setzero_pd();
    __m256d inh = _mm256_set1_pd(1.0);
    alignas(32) double L[4] = {0.0, 0.0, 0.0, 0.0};

    for (std::size_t i = 0; i < n; ++i) {
      const double hd = g.x[i + 1] - g.x[i];
      const __m256d h = _mm256_set1_pd(hd);
      const __m256d qa = _mm256_set1_pd(g.qa[i]);
      const __m256d qb = _mm256_set1_pd(g.qb[i]);

      C = _mm256_fmadd_pd(h, A, C);
      C = _mm256_fmadd_pd(_mm256_set1_pd(0.5 * hd * hd), _mm256_mul_pd(qa, u), C);
      const __m256d unew = _mm256_fmadd_pd(k2v, C, inh);
      const __m256d t = _mm256_fmadd_pd(qb, unew, _mm256_mul_pd(qa, u));
      A = _mm256_fmadd_pd(_mm256_set1_pd(0.5 * hd), t, A);
      u = unew;

      if (_mm256_movemask_pd(_mm256_cmp_pd(u, thresh, _CMP_GT_OQ))) {
        alignas(32) double us[4], As[4], Cs[4];
        _mm256_store_pd(us, u);
        _mm256_store_pd(As, A);
        _mm256_store_pd(Cs, C);
        alignas(32) double inhs[4];
        for (int j = 0; j < 4; ++j) {
          if (us[j] > kRescaleThreshold) {
            const double s = us[j];
            us[j] = 1.0;
            As[j] /= s;
            Cs[j] /= s;
            L[j] += std::log(s);
          }
          inhs[j] = L[j] > 745.0 ? 0.0 : std::exp(-L[j]);
        }
        u = _mm256_load_pd(us);
        A = _mm256_load_pd(As);
        C = _mm256_load_pd(Cs);
        inh = _mm256_load_pd(inhs);
      }
    }

    alignas(32) double us[4], As[4];
    _mm256_store_pd(us, u);
    _mm256_store_pd(As, A);
    for (int j = 0; j < 4; ++j) {
      out[lane + j].log_u = std::log(us[j]) + L[j];
      out[lane + j].log_du = std::log(k2[lane + j] * As[j]) + L[j];
    }
  }
  if (lane < nk) march_boundary_scalar(g, k2 + lane, out + lane, nk - lane);
}

} // namespace heatcoeff::kernels::detail
