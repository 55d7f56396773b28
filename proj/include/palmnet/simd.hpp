#pragma once

#include <cstddef>

namespace palmnet::simd {

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa);

// Raw data-parallel kernels, one table per ISA. Every variant must produce
// bytes identical to the scalar reference: same per-element operation order,
// no FMA contraction, no reassociation. matmul accumulates over k in
// ascending order for each output element; vector variants vectorize the n
// (output column) axis, which keeps that order.
struct KernelTable {
  const char* name;
  // c[m x n] = a[m x k] * b[k x n], all row-major.
  void (*matmul_f32)(const float* a, const float* b, float* c, size_t m,
                     size_t k, size_t n);
  void (*matmul_f64)(const double* a, const double* b, double* c, size_t m,
                     size_t k, size_t n);
  void (*add_f32)(const float* a, const float* b, float* out, size_t n);
  void (*mul_f32)(const float* a, const float* b, float* out, size_t n);
  void (*scale_f32)(const float* a, float s, float* out, size_t n);
  void (*relu_f32)(const float* x, float* out, size_t n);
  // dx = x > 0 ? g : 0
  void (*relu_bwd_f32)(const float* x, const float* g, float* dx, size_t n);
};

const KernelTable& scalar_kernels();

#if defined(PALMNET_X86_64)
const KernelTable& avx2_kernels();
bool cpu_has_avx2();
#endif
#if defined(PALMNET_AARCH64)
const KernelTable& neon_kernels();
#endif

// Table picked at first use: best ISA the CPU supports, overridable with
// PALMNET_SIMD=scalar|avx2|neon|auto.
const KernelTable& active_kernels();
Isa active_isa();

}  // namespace palmnet::simd
