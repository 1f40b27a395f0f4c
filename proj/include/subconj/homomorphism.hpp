#pragma once

#include <cstddef>
#include <vector>

#include "subconj/perm.hpp"
#include "subconj/word.hpp"

namespace subconj {

// Assignment of one permutation per generator.  Whether relators are
// respected is the caller's concern (enumerate_homs only yields ones that do).
class Homomorphism {
 public:
  Homomorphism(std::size_t degree, std::vector<Permutation> images);

  std::size_t degree() const { return degree_; }
  std::size_t rank() const { return images_.size(); }
  const std::vector<Permutation>& images() const { return images_; }
  const Permutation& image(Letter l) const {
    return l.is_inverse() ? inverses_[l.generator()] : images_[l.generator()];
  }

  // Trivial homomorphism of the given rank and degree.
  static Homomorphism trivial(std::size_t rank, std::size_t degree);

  bool operator==(const Homomorphism& other) const { return images_ == other.images_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> images_;
  std::vector<Permutation> inverses_;
};

// Product of generator images along w.  Throws InputError if w uses a
// generator outside the homomorphism's rank.
Permutation evaluate(const Homomorphism& hom, const Word& w);

}  // namespace subconj
