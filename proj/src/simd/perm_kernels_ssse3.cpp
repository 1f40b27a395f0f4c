#include <tmmintrin.h>

#include "subconj/simd/perm_kernels.hpp"

namespace subconj::simd::detail {

namespace {

// table[idx[j]] for 16 indices; table has `padded` bytes.  Each 16-byte slice
// of the table is probed with pshufb, lanes whose index falls outside the
// slice get the high bit set so pshufb yields zero for them.
inline __m128i lookup(const std::uint8_t* table, std::size_t padded, __m128i idx) {
  if (padded == kPermLane) {
    return _mm_shuffle_epi8(_mm_loadu_si128(reinterpret_cast<const __m128i*>(table)), idx);
  }
  const __m128i fifteen = _mm_set1_epi8(15);
  const __m128i high = _mm_set1_epi8(static_cast<char>(0x80));
  __m128i acc = _mm_setzero_si128();
  for (std::size_t t = 0; t < padded; t += kPermLane) {
    __m128i slice = _mm_loadu_si128(reinterpret_cast<const __m128i*>(table + t));
    __m128i local = _mm_sub_epi8(idx, _mm_set1_epi8(static_cast<char>(t)));
    __m128i in_range = _mm_cmpeq_epi8(_mm_min_epu8(local, fifteen), local);
    __m128i sel = _mm_or_si128(local, _mm_andnot_si128(in_range, high));
    acc = _mm_or_si128(acc, _mm_shuffle_epi8(slice, sel));
  }
  return acc;
}

void compose_ssse3(const std::uint8_t* first, const std::uint8_t* second, std::uint8_t* out,
                   std::size_t padded) {
  for (std::size_t i = 0; i < padded; i += kPermLane) {
    __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(first + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), lookup(second, padded, idx));
  }
}

bool is_identity_ssse3(const std::uint8_t* p, std::size_t padded) {
  for (std::size_t i = 0; i < padded; i += kPermLane) {
    __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p + i));
    __m128i id = _mm_loadu_si128(reinterpret_cast<const __m128i*>(kIota + i));
    if (_mm_movemask_epi8(_mm_cmpeq_epi8(v, id)) != 0xFFFF) {
      return false;
    }
  }
  return true;
}

void conjugate_ssse3(const std::uint8_t* p, const std::uint8_t* c, const std::uint8_t* c_inv,
                     std::uint8_t* out, std::size_t padded) {
  for (std::size_t i = 0; i < padded; i += kPermLane) {
    __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(c_inv + i));
    __m128i mid = lookup(p, padded, idx);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), lookup(c, padded, mid));
  }
}

}  // namespace

const PermKernels kSsse3Kernels{SimdLevel::ssse3, compose_ssse3, is_identity_ssse3,
                                conjugate_ssse3};

}  // namespace subconj::simd::detail
