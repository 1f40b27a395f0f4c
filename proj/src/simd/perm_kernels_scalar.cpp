#include "subconj/simd/perm_kernels.hpp"

namespace subconj::simd::detail {

namespace {

void compose_scalar(const std::uint8_t* first, const std::uint8_t* second, std::uint8_t* out,
                    std::size_t padded) {
  for (std::size_t i = 0; i < padded; ++i) {
    out[i] = second[first[i]];
  }
}

bool is_identity_scalar(const std::uint8_t* p, std::size_t padded) {
  for (std::size_t i = 0; i < padded; ++i) {
    if (p[i] != i) {
      return false;
    }
  }
  return true;
}

void conjugate_scalar(const std::uint8_t* p, const std::uint8_t* c, const std::uint8_t* c_inv,
                      std::uint8_t* out, std::size_t padded) {
  // out = c_inv then p then c, so out[i] = c[p[c_inv[i]]].
  for (std::size_t i = 0; i < padded; ++i) {
    out[i] = c[p[c_inv[i]]];
  }
}

}  // namespace

const std::uint8_t kIota[kMaxDegree] = {
#define SUBCONJ_ROW(r)                                                                           \
  r * 16 + 0, r * 16 + 1, r * 16 + 2, r * 16 + 3, r * 16 + 4, r * 16 + 5, r * 16 + 6, r * 16 + 7, \
      r * 16 + 8, r * 16 + 9, r * 16 + 10, r * 16 + 11, r * 16 + 12, r * 16 + 13, r * 16 + 14,    \
      r * 16 + 15
    SUBCONJ_ROW(0),  SUBCONJ_ROW(1),  SUBCONJ_ROW(2),  SUBCONJ_ROW(3),
    SUBCONJ_ROW(4),  SUBCONJ_ROW(5),  SUBCONJ_ROW(6),  SUBCONJ_ROW(7),
    SUBCONJ_ROW(8),  SUBCONJ_ROW(9),  SUBCONJ_ROW(10), SUBCONJ_ROW(11),
    SUBCONJ_ROW(12), SUBCONJ_ROW(13), SUBCONJ_ROW(14), SUBCONJ_ROW(15),
#undef SUBCONJ_ROW
};

const PermKernels kScalarKernels{SimdLevel::scalar, compose_scalar, is_identity_scalar,
                                 conjugate_scalar};

}  // namespace subconj::simd::detail
