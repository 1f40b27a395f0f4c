#include <cstdlib>
#include <stdexcept>
#include <string>

#include "subconj/simd/perm_kernels.hpp"

namespace subconj::simd {

namespace {

bool cpu_supports(SimdLevel level) {
  switch (level) {
    case SimdLevel::scalar:
      return true;
    case SimdLevel::ssse3:
#if defined(SUBCONJ_HAVE_SSSE3)
      return __builtin_cpu_supports("ssse3");
#else
      return false;
#endif
    case SimdLevel::avx2:
#if defined(SUBCONJ_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case SimdLevel::neon:
#if defined(SUBCONJ_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const PermKernels* table_for(SimdLevel level) {
  switch (level) {
    case SimdLevel::scalar:
      return &detail::kScalarKernels;
#if defined(SUBCONJ_HAVE_SSSE3)
    case SimdLevel::ssse3:
      return &detail::kSsse3Kernels;
#endif
#if defined(SUBCONJ_HAVE_AVX2)
    case SimdLevel::avx2:
      return &detail::kAvx2Kernels;
#endif
#if defined(SUBCONJ_HAVE_NEON)
    case SimdLevel::neon:
      return &detail::kNeonKernels;
#endif
    default:
      return nullptr;
  }
}

const PermKernels& resolve() {
  if (const char* env = std::getenv("SUBCONJ_SIMD_LEVEL")) {
    for (SimdLevel level : {SimdLevel::scalar, SimdLevel::ssse3, SimdLevel::avx2,
                            SimdLevel::neon}) {
      if (level_name(level) == env) {
        return kernels_for(level);
      }
    }
    throw std::invalid_argument(std::string("SUBCONJ_SIMD_LEVEL ") + env + " unknown");
  }
  return kernels_for(available_levels().back());
}

}  // namespace

std::string_view level_name(SimdLevel level) {
  switch (level) {
    case SimdLevel::scalar:
      return "scalar";
    case SimdLevel::ssse3:
      return "ssse3";
    case SimdLevel::avx2:
      return "avx2";
    case SimdLevel::neon:
      return "neon";
  }
  return "unknown";
}

std::vector<SimdLevel> available_levels() {
  std::vector<SimdLevel> out;
  for (SimdLevel level : {SimdLevel::scalar, SimdLevel::ssse3, SimdLevel::avx2,
                          SimdLevel::neon}) {
    if (table_for(level) != nullptr && cpu_supports(level)) {
      out.push_back(level);
    }
  }
  return out;
}

const PermKernels& kernels_for(SimdLevel level) {
  const PermKernels* k = table_for(level);
  if (k == nullptr || !cpu_supports(level)) {
    throw std::invalid_argument(std::string("SIMD level ") + std::string(level_name(level)) +
                                " not available");
  }
  return *k;
}

const PermKernels& active_kernels() {
  static const PermKernels& kernels = resolve();
  return kernels;
}

}  // namespace subconj::simd
