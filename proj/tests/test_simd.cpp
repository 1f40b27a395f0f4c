#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "subconj/simd/perm_kernels.hpp"

using namespace subconj::simd;

namespace {

std::vector<std::uint8_t> random_table(std::size_t degree, std::mt19937_64& rng) {
  std::vector<std::uint8_t> t(padded_length(degree));
  std::iota(t.begin(), t.end(), std::uint8_t{0});
  std::shuffle(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(degree), rng);
  return t;
}

std::vector<std::uint8_t> inverse_of(const std::vector<std::uint8_t>& t) {
  std::vector<std::uint8_t> inv(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    inv[t[i]] = static_cast<std::uint8_t>(i);
  }
  return inv;
}

}  // namespace

TEST_CASE("scalar kernels match the definitions") {
  std::mt19937_64 rng(11);
  const PermKernels& k = kernels_for(SimdLevel::scalar);
  for (std::size_t degree : {1, 5, 16, 17, 100, 256}) {
    auto p = random_table(degree, rng);
    auto q = random_table(degree, rng);
    const std::size_t n = p.size();
    std::vector<std::uint8_t> out(n);
    k.compose(p.data(), q.data(), out.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(out[i] == q[p[i]]);
    }
    auto c = random_table(degree, rng);
    auto c_inv = inverse_of(c);
    k.conjugate(p.data(), c.data(), c_inv.data(), out.data(), n);
    // c^-1 p c under the right action: i -> c^-1(i) -> p -> c
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(out[i] == c[p[c_inv[i]]]);
    }
    std::vector<std::uint8_t> id(n);
    std::iota(id.begin(), id.end(), std::uint8_t{0});
    CHECK(k.is_identity(id.data(), n));
  }
}

TEST_CASE("every available level agrees with scalar") {
  std::mt19937_64 rng(12);
  const PermKernels& ref = kernels_for(SimdLevel::scalar);
  auto levels = available_levels();
  REQUIRE(levels.front() == SimdLevel::scalar);
  for (SimdLevel level : levels) {
    CAPTURE(std::string(level_name(level)));
    const PermKernels& k = kernels_for(level);
    CHECK(k.level == level);
    for (std::size_t degree = 1; degree <= kMaxDegree; ++degree) {
      auto p = random_table(degree, rng);
      auto q = random_table(degree, rng);
      auto c = random_table(degree, rng);
      auto c_inv = inverse_of(c);
      const std::size_t n = p.size();
      std::vector<std::uint8_t> want(n), got(n);
      ref.compose(p.data(), q.data(), want.data(), n);
      k.compose(p.data(), q.data(), got.data(), n);
      CHECK(want == got);
      ref.conjugate(p.data(), c.data(), c_inv.data(), want.data(), n);
      k.conjugate(p.data(), c.data(), c_inv.data(), got.data(), n);
      CHECK(want == got);
      CHECK(k.is_identity(p.data(), n) == ref.is_identity(p.data(), n));
      std::vector<std::uint8_t> id(n);
      std::iota(id.begin(), id.end(), std::uint8_t{0});
      CHECK(k.is_identity(id.data(), n));
      if (degree > 1) {
        // A single moved point in the last slice must be seen.
        std::swap(id[degree - 2], id[degree - 1]);
        CHECK_FALSE(k.is_identity(id.data(), n));
      }
    }
  }
}

TEST_CASE("unavailable levels are rejected") {
  auto levels = available_levels();
  for (SimdLevel level : {SimdLevel::ssse3, SimdLevel::avx2, SimdLevel::neon}) {
    if (std::find(levels.begin(), levels.end(), level) == levels.end()) {
      CHECK_THROWS_AS(kernels_for(level), std::invalid_argument);
    }
  }
  CHECK(active_kernels().level == levels.back());
}
