// AVX2+FMA kernel variants. This translation unit is the only one compiled
// with -mavx2 -mfma; it must not be entered unless cpuid reports support.

#include <immintrin.h>

#include <cstddef>

#include "freud/kernels.hpp"

namespace freud::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double weighted_dot_avx2(const double* w, const double* p, const double* q,
                         std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d wp = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(p + i));
    acc = _mm256_fmadd_pd(wp, _mm256_loadu_pd(q + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += w[i] * p[i] * q[i];
  return s;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void recurrence_step_avx2(double* out, const double* x, const double* p,
                          const double* pm1, double b, std::size_t n) {
  __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xp = _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(p + i));
    _mm256_storeu_pd(out + i, _mm256_fnmadd_pd(vb, _mm256_loadu_pd(pm1 + i), xp));
  }
  for (; i < n; ++i) out[i] = x[i] * p[i] - b * pm1[i];
}

const Backend kAvx2 = {"avx2", weighted_dot_avx2, dot_avx2,
                       recurrence_step_avx2};

}  // namespace

const Backend* avx2_backend() {
  static const bool ok =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok ? &kAvx2 : nullptr;
}

}  // namespace freud::kernels
