#pragma once

// Byte-table permutation kernels with a scalar reference and SIMD variants
// chosen at runtime.
//
// A permutation of degree n <= 256 is stored as n image bytes padded with
// fixed points up to a multiple of kPermLane (16).  All kernels take padded
// lengths and assume every stored byte is a valid index into the table.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace subconj::simd {

inline constexpr std::size_t kPermLane = 16;
inline constexpr std::size_t kMaxDegree = 256;

constexpr std::size_t padded_length(std::size_t degree) {
  return degree == 0 ? kPermLane : (degree + kPermLane - 1) / kPermLane * kPermLane;
}

enum class SimdLevel { scalar, ssse3, avx2, neon };

std::string_view level_name(SimdLevel level);

// out[i] = second[first[i]] for i < padded: apply first, then second.
using ComposeFn = void (*)(const std::uint8_t* first, const std::uint8_t* second,
                           std::uint8_t* out, std::size_t padded);
// True iff p[i] == i for i < padded.
using IsIdentityFn = bool (*)(const std::uint8_t* p, std::size_t padded);
// c^-1 * p * c, i.e. out[c[i]] = c[p[i]].  c_inv is c's inverse table.
using ConjugateFn = void (*)(const std::uint8_t* p, const std::uint8_t* c,
                             const std::uint8_t* c_inv, std::uint8_t* out,
                             std::size_t padded);

struct PermKernels {
  SimdLevel level;
  ComposeFn compose;
  IsIdentityFn is_identity;
  ConjugateFn conjugate;
};

// Levels compiled in and supported by this CPU, scalar first.
std::vector<SimdLevel> available_levels();
// Kernels for a specific level; throws std::invalid_argument if unavailable.
const PermKernels& kernels_for(SimdLevel level);
// Best available level, or the one named by SUBCONJ_SIMD_LEVEL
// (scalar/ssse3/avx2/neon) if set.  Resolved once on first call.
const PermKernels& active_kernels();

namespace detail {
extern const PermKernels kScalarKernels;
#if defined(SUBCONJ_HAVE_SSSE3)
extern const PermKernels kSsse3Kernels;
#endif
#if defined(SUBCONJ_HAVE_AVX2)
extern const PermKernels kAvx2Kernels;
#endif
#if defined(SUBCONJ_HAVE_NEON)
extern const PermKernels kNeonKernels;
#endif
// 0, 1, ..., 255.
extern const std::uint8_t kIota[kMaxDegree];
}  // namespace detail

}  // namespace subconj::simd
