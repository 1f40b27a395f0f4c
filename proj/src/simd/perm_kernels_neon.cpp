#include <arm_neon.h>

#include "subconj/simd/perm_kernels.hpp"

namespace subconj::simd::detail {

namespace {

// vqtbl1q returns zero for indices >= 16, so out-of-slice lanes need no mask.
inline uint8x16_t lookup(const std::uint8_t* table, std::size_t padded, uint8x16_t idx) {
  uint8x16_t acc = vdupq_n_u8(0);
  for (std::size_t t = 0; t < padded; t += kPermLane) {
    uint8x16_t slice = vld1q_u8(table + t);
    uint8x16_t local = vsubq_u8(idx, vdupq_n_u8(static_cast<std::uint8_t>(t)));
    acc = vorrq_u8(acc, vqtbl1q_u8(slice, local));
  }
  return acc;
}

void compose_neon(const std::uint8_t* first, const std::uint8_t* second, std::uint8_t* out,
                  std::size_t padded) {
  for (std::size_t i = 0; i < padded; i += kPermLane) {
    vst1q_u8(out + i, lookup(second, padded, vld1q_u8(first + i)));
  }
}

bool is_identity_neon(const std::uint8_t* p, std::size_t padded) {
  for (std::size_t i = 0; i < padded; i += kPermLane) {
    uint8x16_t eq = vceqq_u8(vld1q_u8(p + i), vld1q_u8(kIota + i));
    if (vminvq_u8(eq) != 0xFF) {
      return false;
    }
  }
  return true;
}

void conjugate_neon(const std::uint8_t* p, const std::uint8_t* c, const std::uint8_t* c_inv,
                    std::uint8_t* out, std::size_t padded) {
  for (std::size_t i = 0; i < padded; i += kPermLane) {
    uint8x16_t mid = lookup(p, padded, vld1q_u8(c_inv + i));
    vst1q_u8(out + i, lookup(c, padded, mid));
  }
}

}  // namespace

const PermKernels kNeonKernels{SimdLevel::neon, compose_neon, is_identity_neon, conjugate_neon};

}  // namespace subconj::simd::detail
