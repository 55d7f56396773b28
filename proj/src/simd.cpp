#include "palmnet/simd.hpp"

#include <cstdlib>
#include <string>

#include "palmnet/error.hpp"

namespace palmnet::simd {
namespace {

Isa detect_isa() {
  const char* env = std::getenv("PALMNET_SIMD");
  std::string want = env ? env : "auto";
  if (want == "scalar") return Isa::Scalar;
#if defined(PALMNET_X86_64)
  if (want == "avx2") {
    if (!cpu_has_avx2()) throw UsageError("PALMNET_SIMD=avx2: CPU lacks AVX2");
    return Isa::Avx2;
  }
  if (want == "auto" || want.empty())
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
#elif defined(PALMNET_AARCH64)
  if (want == "neon") return Isa::Neon;
  if (want == "auto" || want.empty()) return Isa::Neon;
#else
  if (want == "auto" || want.empty()) return Isa::Scalar;
#endif
  throw UsageError("PALMNET_SIMD: unsupported value '" + want + "'");
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    default: return "scalar";
  }
}

Isa active_isa() {
  static const Isa isa = detect_isa();
  return isa;
}

const KernelTable& active_kernels() {
  switch (active_isa()) {
#if defined(PALMNET_X86_64)
    case Isa::Avx2: return avx2_kernels();
#endif
#if defined(PALMNET_AARCH64)
    case Isa::Neon: return neon_kernels();
#endif
    default: return scalar_kernels();
  }
}

}  // namespace palmnet::simd
