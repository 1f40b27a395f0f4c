#pragma once

// Subgroup (into-)conjugacy in free groups, with the convention
// A^c = c^-1 A c throughout.

#include <cstddef>
#include <optional>
#include <vector>

#include "subconj/stallings.hpp"
#include "subconj/word.hpp"

namespace subconj {

struct ConjugacyAnswer {
  bool yes = false;
  // Present iff yes.
  std::optional<Word> conjugator;
  std::size_t checked_vertices = 0;
};

// Decides whether H1^g ≤ H2 for some g.  On yes, g is the shortest (then
// shortlex least) candidate over the successful core vertices and has been
// checked by membership.  Throws InputError when the alphabet, the graph
// and the words disagree on rank.
ConjugacyAnswer into_conjugator(const Alphabet& alphabet, const std::vector<Word>& h1_gens,
                                const SubgroupGraph& h2);

// Decides whether H1^g = H2 for some g, running the into-test both ways.
ConjugacyAnswer conjugator(const Alphabet& alphabet, const std::vector<Word>& h1_gens,
                           const std::vector<Word>& h2_gens);

// Decides whether w^g ∈ H for some g.
ConjugacyAnswer element_into_conjugator(const Alphabet& alphabet, const Word& w,
                                        const SubgroupGraph& h);

}  // namespace subconj
