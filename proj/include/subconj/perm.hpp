#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subconj/simd/perm_kernels.hpp"

namespace subconj {

// A permutation of {0, ..., degree-1}, degree <= 256.  Acts on the right:
// (p * q)(i) = q(p(i)), so words evaluate left to right.
class Permutation {
 public:
  Permutation() : Permutation(1) {}
  // Identity of the given degree.
  explicit Permutation(std::size_t degree);
  // Throws InputError unless images is a bijection of {0..n-1}.
  static Permutation from_images(std::span<const std::size_t> images);
  // Parses disjoint cycle notation such as "(0 1)(2 3)"; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::uint8_t operator()(std::size_t point) const { return data_[point]; }
  std::span<const std::uint8_t> padded_bytes() const { return data_; }

  bool is_identity() const;
  Permutation inverse() const;
  // this^-1 * p * this
  Permutation conjugate_of(const Permutation& p) const;

  friend Permutation operator*(const Permutation& first, const Permutation& second);

  bool operator==(const Permutation& other) const {
    return degree_ == other.degree_ && data_ == other.data_;
  }
  // Lexicographic on the image sequence.
  bool operator<(const Permutation& other) const;

  // Disjoint cycles, each starting at its smallest point, cycles ordered by
  // smallest moved point; identity is "()".
  std::string cycle_notation() const;

 private:
  std::size_t degree_;
  std::vector<std::uint8_t> data_;
};

// Every permutation of the given degree in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t degree);

// Subgroup of S_degree generated by the given permutations, sorted.  Always
// contains the identity.
std::vector<Permutation> generate_group(std::size_t degree,
                                        const std::vector<Permutation>& generators);

}  // namespace subconj

template <>
struct std::hash<subconj::Permutation> {
  std::size_t operator()(const subconj::Permutation& p) const noexcept;
};
