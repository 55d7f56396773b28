#include "palmnet/simd.hpp"

#if defined(PALMNET_AARCH64)

#include <arm_neon.h>

#include <algorithm>

namespace palmnet::simd {
namespace {

// Mirrors the AVX2 layout with 128-bit lanes. vmlaq is a fused op on aarch64,
// so mul and add stay separate to keep bits equal to the scalar reference.
void matmul_f32_neon(const float* a, const float* b, float* c, size_t m,
                     size_t k, size_t n) {
  for (size_t i = 0; i < m; ++i) {
    float* crow = c + i * n;
    std::fill(crow, crow + n, 0.0f);
    for (size_t p = 0; p < k; ++p) {
      const float aip = a[i * k + p];
      const float* brow = b + p * n;
      const float32x4_t va = vdupq_n_f32(aip);
      size_t j = 0;
      for (; j + 4 <= n; j += 4) {
        float32x4_t vb = vld1q_f32(brow + j);
        float32x4_t vc = vld1q_f32(crow + j);
        vc = vaddq_f32(vc, vmulq_f32(va, vb));
        vst1q_f32(crow + j, vc);
      }
      for (; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void matmul_f64_neon(const double* a, const double* b, double* c, size_t m,
                     size_t k, size_t n) {
  for (size_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    std::fill(crow, crow + n, 0.0);
    for (size_t p = 0; p < k; ++p) {
      const double aip = a[i * k + p];
      const double* brow = b + p * n;
      const float64x2_t va = vdupq_n_f64(aip);
      size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        float64x2_t vb = vld1q_f64(brow + j);
        float64x2_t vc = vld1q_f64(crow + j);
        vc = vaddq_f64(vc, vmulq_f64(va, vb));
        vst1q_f64(crow + j, vc);
      }
      for (; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void add_neon(const float* a, const float* b, float* out, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    vst1q_f32(out + i, vaddq_f32(vld1q_f32(a + i), vld1q_f32(b + i)));
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void mul_neon(const float* a, const float* b, float* out, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    vst1q_f32(out + i, vmulq_f32(vld1q_f32(a + i), vld1q_f32(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void scale_neon(const float* a, float s, float* out, size_t n) {
  const float32x4_t vs = vdupq_n_f32(s);
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    vst1q_f32(out + i, vmulq_f32(vld1q_f32(a + i), vs));
  for (; i < n; ++i) out[i] = a[i] * s;
}

void relu_neon(const float* x, float* out, size_t n) {
  const float32x4_t zero = vdupq_n_f32(0.0f);
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    vst1q_f32(out + i, vmaxq_f32(vld1q_f32(x + i), zero));
  for (; i < n; ++i) out[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_bwd_neon(const float* x, const float* g, float* dx, size_t n) {
  const float32x4_t zero = vdupq_n_f32(0.0f);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t mask = vcgtq_f32(vld1q_f32(x + i), zero);
    float32x4_t vg = vld1q_f32(g + i);
    vst1q_f32(dx + i,
              vreinterpretq_f32_u32(vandq_u32(mask, vreinterpretq_u32_f32(vg))));
  }
  for (; i < n; ++i) dx[i] = x[i] > 0.0f ? g[i] : 0.0f;
}

}  // namespace

const KernelTable& neon_kernels() {
  static const KernelTable table = {
      "neon",    matmul_f32_neon, matmul_f64_neon, add_neon,
      mul_neon,  scale_neon,      relu_neon,       relu_bwd_neon,
  };
  return table;
}

}  // namespace palmnet::simd

#endif  // PALMNET_AARCH64
