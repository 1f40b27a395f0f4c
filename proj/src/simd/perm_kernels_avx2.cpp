#include <immintrin.h>

#include "subconj/simd/perm_kernels.hpp"

namespace subconj::simd::detail {

namespace {

// 32-wide variant of the sliced pshufb lookup: every 16-byte table slice is
// broadcast to both lanes since vpshufb does not cross lanes.
inline __m256i lookup32(const std::uint8_t* table, std::size_t padded, __m256i idx) {
  const __m256i fifteen = _mm256_set1_epi8(15);
  const __m256i high = _mm256_set1_epi8(static_cast<char>(0x80));
  if (padded == kPermLane) {
    __m256i slice = _mm256_broadcastsi128_si256(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(table)));
    return _mm256_shuffle_epi8(slice, idx);
  }
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t t = 0; t < padded; t += kPermLane) {
    __m256i slice = _mm256_broadcastsi128_si256(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(table + t)));
    __m256i local = _mm256_sub_epi8(idx, _mm256_set1_epi8(static_cast<char>(t)));
    __m256i in_range = _mm256_cmpeq_epi8(_mm256_min_epu8(local, fifteen), local);
    __m256i sel = _mm256_or_si256(local, _mm256_andnot_si256(in_range, high));
    acc = _mm256_or_si256(acc, _mm256_shuffle_epi8(slice, sel));
  }
  return acc;
}

inline __m128i lookup16(const std::uint8_t* table, std::size_t padded, __m128i idx) {
  return _mm256_castsi256_si128(lookup32(table, padded, _mm256_castsi128_si256(idx)));
}

void compose_avx2(const std::uint8_t* first, const std::uint8_t* second, std::uint8_t* out,
                  std::size_t padded) {
  std::size_t i = 0;
  for (; i + 2 * kPermLane <= padded; i += 2 * kPermLane) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(first + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), lookup32(second, padded, idx));
  }
  if (i < padded) {
    __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(first + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), lookup16(second, padded, idx));
  }
}

bool is_identity_avx2(const std::uint8_t* p, std::size_t padded) {
  std::size_t i = 0;
  for (; i + 2 * kPermLane <= padded; i += 2 * kPermLane) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    __m256i id = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(kIota + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, id)) != -1) {
      return false;
    }
  }
  if (i < padded) {
    __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p + i));
    __m128i id = _mm_loadu_si128(reinterpret_cast<const __m128i*>(kIota + i));
    return _mm_movemask_epi8(_mm_cmpeq_epi8(v, id)) == 0xFFFF;
  }
  return true;
}

void conjugate_avx2(const std::uint8_t* p, const std::uint8_t* c, const std::uint8_t* c_inv,
                    std::uint8_t* out, std::size_t padded) {
  std::size_t i = 0;
  for (; i + 2 * kPermLane <= padded; i += 2 * kPermLane) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c_inv + i));
    __m256i mid = lookup32(p, padded, idx);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), lookup32(c, padded, mid));
  }
  if (i < padded) {
    __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(c_inv + i));
    __m128i mid = lookup16(p, padded, idx);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), lookup16(c, padded, mid));
  }
}

}  // namespace

const PermKernels kAvx2Kernels{SimdLevel::avx2, compose_avx2, is_identity_avx2,
                               conjugate_avx2};

}  // namespace subconj::simd::detail
