#include "subconj/homomorphism.hpp"

#include "subconj/error.hpp"

namespace subconj {

Homomorphism::Homomorphism(std::size_t degree, std::vector<Permutation> images)
    : degree_(degree), images_(std::move(images)) {
  inverses_.reserve(images_.size());
  for (const auto& p : images_) {
    if (p.degree() != degree_) {
      throw InputError("homomorphism image has degree " + std::to_string(p.degree()) +
                       ", expected " + std::to_string(degree_));
    }
    inverses_.push_back(p.inverse());
  }
}

Homomorphism Homomorphism::trivial(std::size_t rank, std::size_t degree) {
  return Homomorphism(degree, std::vector<Permutation>(rank, Permutation(degree)));
}

Permutation evaluate(const Homomorphism& hom, const Word& w) {
  if (w.min_rank() > hom.rank()) {
    throw InputError("word uses a generator outside the homomorphism's rank");
  }
  Permutation acc(hom.degree());
  for (Letter l : w) {
    acc = acc * hom.image(l);
  }
  return acc;
}

}  // namespace subconj
