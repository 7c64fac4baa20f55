#pragma once

// Double-precision inner-loop kernels behind the discretized Stieltjes
// procedure and the quadrature sums:
//
//   weighted_dot(w,p,q,n)  = sum_i w[i]*p[i]*q[i]
//   dot(a,b,n)             = sum_i a[i]*b[i]
//   recurrence_step        : out[i] = x[i]*p[i] - b*pm1[i]
//
// A scalar reference implementation always exists; vectorized variants
// (AVX2+FMA on x86-64, NEON on aarch64) are selected once at runtime from
// cpuid / the FREUD_KERNELS environment variable and are equivalence-tested
// against the scalar path.

#include <cstddef>

namespace freud::kernels {

struct Backend {
  const char* name;
  double (*weighted_dot)(const double* w, const double* p, const double* q,
                         std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
  void (*recurrence_step)(double* out, const double* x, const double* p,
                          const double* pm1, double b, std::size_t n);
};

const Backend& scalar_backend();
const Backend* avx2_backend();  // nullptr when unsupported (ISA or CPU)
const Backend* neon_backend();

// The dispatched backend. Resolution order: FREUD_KERNELS env var
// ("scalar"|"avx2"|"neon"), then best supported vector ISA, then scalar.
const Backend& active();

// Test hook; throws ArgumentError for unknown/unsupported names.
void force_backend(const char* name);

}  // namespace freud::kernels
