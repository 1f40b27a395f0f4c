#include "subconj/presentation.hpp"

#include <string>

#include "subconj/error.hpp"

namespace subconj {

Presentation::Presentation(Alphabet a, std::vector<Word> rels)
    : alphabet(std::move(a)), relators(std::move(rels)) {
  check_words(alphabet.rank(), relators, "relator");
}

void check_words(std::size_t rank, const std::vector<Word>& words, const char* what) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].min_rank() > rank) {
      throw InputError(std::string(what) + " " + std::to_string(i + 1) +
                       " uses a generator outside the alphabet of rank " +
                       std::to_string(rank));
    }
  }
}

}  // namespace subconj
