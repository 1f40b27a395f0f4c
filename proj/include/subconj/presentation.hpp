#pragma once

#include <vector>

#include "subconj/word.hpp"

namespace subconj {

// G = F(alphabet) / <<relators>>.  No relators means the free group.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  explicit Presentation(Alphabet a, std::vector<Word> rels = {});

  static Presentation free(const Alphabet& a) { return Presentation(a); }
  std::size_t rank() const { return alphabet.rank(); }
};

// Throws InputError if any word uses a generator outside the rank.
void check_words(std::size_t rank, const std::vector<Word>& words, const char* what);

}  // namespace subconj
