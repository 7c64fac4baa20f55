#include "freud/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "freud/errors.hpp"

#if defined(__aarch64__) || defined(__ARM_NEON)
#include <arm_neon.h>
#define FREUD_NEON 1
#else
#define FREUD_NEON 0
#endif

namespace freud::kernels {

namespace {

double weighted_dot_scalar(const double* w, const double* p, const double* q,
                           std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * p[i] * q[i];
  return acc;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void recurrence_step_scalar(double* out, const double* x, const double* p,
                            const double* pm1, double b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * p[i] - b * pm1[i];
}

#if FREUD_NEON
double weighted_dot_neon(const double* w, const double* p, const double* q,
                         std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t wp = vmulq_f64(vld1q_f64(w + i), vld1q_f64(p + i));
    acc = vfmaq_f64(acc, wp, vld1q_f64(q + i));
  }
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) s += w[i] * p[i] * q[i];
  return s;
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void recurrence_step_neon(double* out, const double* x, const double* p,
                          const double* pm1, double b, std::size_t n) {
  float64x2_t vb = vdupq_n_f64(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t xp = vmulq_f64(vld1q_f64(x + i), vld1q_f64(p + i));
    vst1q_f64(out + i, vfmsq_f64(xp, vb, vld1q_f64(pm1 + i)));
  }
  for (; i < n; ++i) out[i] = x[i] * p[i] - b * pm1[i];
}

const Backend kNeon = {"neon", weighted_dot_neon, dot_neon,
                       recurrence_step_neon};
#endif

const Backend kScalar = {"scalar", weighted_dot_scalar, dot_scalar,
                         recurrence_step_scalar};

std::atomic<const Backend*> g_active{nullptr};

const Backend* pick_default() {
  if (const char* env = std::getenv("FREUD_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return &kScalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_backend()) return avx2_backend();
    if (std::strcmp(env, "neon") == 0 && neon_backend()) return neon_backend();
    // Unknown or unsupported request: fall through to auto-detection.
  }
  if (const Backend* b = avx2_backend()) return b;
  if (const Backend* b = neon_backend()) return b;
  return &kScalar;
}

}  // namespace

const Backend& scalar_backend() { return kScalar; }

const Backend* neon_backend() {
#if FREUD_NEON
  return &kNeon;
#else
  return nullptr;
#endif
}

#if !defined(FREUD_HAVE_AVX2_TU)
const Backend* avx2_backend() { return nullptr; }
#endif

const Backend& active() {
  const Backend* b = g_active.load(std::memory_order_acquire);
  if (!b) {
    b = pick_default();
    g_active.store(b, std::memory_order_release);
  }
  return *b;
}

void force_backend(const char* name) {
  if (std::strcmp(name, "scalar") == 0) {
    g_active.store(&kScalar, std::memory_order_release);
    return;
  }
  if (std::strcmp(name, "avx2") == 0) {
    if (const Backend* b = avx2_backend()) {
      g_active.store(b, std::memory_order_release);
      return;
    }
    throw ArgumentError("avx2 kernels not supported on this CPU/build");
  }
  if (std::strcmp(name, "neon") == 0) {
    if (const Backend* b = neon_backend()) {
      g_active.store(b, std::memory_order_release);
      return;
    }
    throw ArgumentError("neon kernels not supported on this CPU/build");
  }
  throw ArgumentError(std::string("unknown kernel backend: ") + name);
}

}  // namespace freud::kernels
