#include "palmnet/simd.hpp"

#if defined(PALMNET_X86_64)

#include <immintrin.h>

#include <algorithm>

namespace palmnet::simd {
namespace {

// Vectorized over output columns; k stays the serial reduction axis so each
// c[i][j] sees the exact scalar-kernel operation order. Mul and add are kept
// separate (no fmadd) to match the -ffp-contract=off scalar path.
void matmul_f32_avx2(const float* a, const float* b, float* c, size_t m,
                     size_t k, size_t n) {
  for (size_t i = 0; i < m; ++i) {
    float* crow = c + i * n;
    std::fill(crow, crow + n, 0.0f);
    for (size_t p = 0; p < k; ++p) {
      const float aip = a[i * k + p];
      const float* brow = b + p * n;
      const __m256 va = _mm256_set1_ps(aip);
      size_t j = 0;
      for (; j + 8 <= n; j += 8) {
        __m256 vb = _mm256_loadu_ps(brow + j);
        __m256 vc = _mm256_loadu_ps(crow + j);
        vc = _mm256_add_ps(vc, _mm256_mul_ps(va, vb));
        _mm256_storeu_ps(crow + j, vc);
      }
      for (; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void matmul_f64_avx2(const double* a, const double* b, double* c, size_t m,
                     size_t k, size_t n) {
  for (size_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    std::fill(crow, crow + n, 0.0);
    for (size_t p = 0; p < k; ++p) {
      const double aip = a[i * k + p];
      const double* brow = b + p * n;
      const __m256d va = _mm256_set1_pd(aip);
      size_t j = 0;
      for (; j + 4 <= n; j += 4) {
        __m256d vb = _mm256_loadu_pd(brow + j);
        __m256d vc = _mm256_loadu_pd(crow + j);
        vc = _mm256_add_pd(vc, _mm256_mul_pd(va, vb));
        _mm256_storeu_pd(crow + j, vc);
      }
      for (; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void add_avx2(const float* a, const float* b, float* out, size_t n) {
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(out + i, _mm256_add_ps(_mm256_loadu_ps(a + i),
                                            _mm256_loadu_ps(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void mul_avx2(const float* a, const float* b, float* out, size_t n) {
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(out + i, _mm256_mul_ps(_mm256_loadu_ps(a + i),
                                            _mm256_loadu_ps(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void scale_avx2(const float* a, float s, float* out, size_t n) {
  const __m256 vs = _mm256_set1_ps(s);
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(out + i, _mm256_mul_ps(_mm256_loadu_ps(a + i), vs));
  }
  for (; i < n; ++i) out[i] = a[i] * s;
}

void relu_avx2(const float* x, float* out, size_t n) {
  const __m256 zero = _mm256_setzero_ps();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(out + i, _mm256_max_ps(_mm256_loadu_ps(x + i), zero));
  }
  for (; i < n; ++i) out[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_bwd_avx2(const float* x, const float* g, float* dx, size_t n) {
  const __m256 zero = _mm256_setzero_ps();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 mask = _mm256_cmp_ps(_mm256_loadu_ps(x + i), zero, _CMP_GT_OQ);
    _mm256_storeu_ps(dx + i, _mm256_and_ps(mask, _mm256_loadu_ps(g + i)));
  }
  for (; i < n; ++i) dx[i] = x[i] > 0.0f ? g[i] : 0.0f;
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table = {
      "avx2",    matmul_f32_avx2, matmul_f64_avx2, add_avx2,
      mul_avx2,  scale_avx2,      relu_avx2,       relu_bwd_avx2,
  };
  return table;
}

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

}  // namespace palmnet::simd

#endif  // PALMNET_X86_64
