#pragma once

// Two-sided search for into-conjugacy in finitely presented groups, and the
// Mihailova encoding of a word problem as a conjugacy question in F_s x F_s.

#include <cstddef>
#include <optional>
#include <vector>

#include "subconj/presentation.hpp"
#include "subconj/quotients.hpp"
#include "subconj/word.hpp"

namespace subconj {

// {w^-1 r w : r a relator or inverse relator, |w| <= level}, reduced, with
// duplicates and trivial words removed, in order of w (shortlex) then r.
std::vector<Word> normal_closure_approximant(const Presentation& pres, std::size_t level);

struct Budget {
  std::size_t max_conj_len = 8;
  std::size_t max_level = 2;
  std::size_t max_degree = 4;
};

enum class Status { yes, no, unknown };

struct BudgetSpent {
  std::size_t conjugator_length = 0;
  std::size_t approximant_level = 0;
  std::size_t max_degree = 0;
};

struct SemiDecision {
  Status status = Status::unknown;
  // yes: H1^conjugator ≤ H2 in G, certified at approximant level `level`.
  std::optional<Word> conjugator;
  std::size_t level = 0;
  // no: the image of H1 is not conjugate into the image of H2.  The
  // witness's h1/h2 fields follow find_witness, so here witness.h2_image is
  // the image of H1 and witness.h1_image the image of H2.
  std::optional<Witness> witness;
  BudgetSpent spent;
};

// Interleaves the quotient search (one degree per round) with the
// conjugator search (one diagonal conjugator-length + level = s per round).
SemiDecision semi_decide_into(const Presentation& pres, const std::vector<Word>& h1_gens,
                              const std::vector<Word>& h2_gens, const Budget& budget);

// Re-checks a yes certificate: every g^-1 u g lies in the free-group
// subgroup generated by h2_gens and the level-L approximant.
bool certify_yes(const Presentation& pres, const std::vector<Word>& h1_gens,
                 const std::vector<Word>& h2_gens, const Word& g, std::size_t level);

struct MihailovaInstance {
  // F_s x F_s on a1..as, b1..bs with relators [ai, bj] = ai bj ai^-1 bj^-1.
  Presentation ambient;
  // ai bi for each i, then each relator of the source rewritten in b-letters.
  std::vector<Word> l_gens;
  Presentation source;
};

MihailovaInstance mihailova_generators(const Presentation& h_pres);

// Word over the source generators rewritten in the a-letters.
Word to_a_letters(const MihailovaInstance& instance, const Word& u);

// yes certifies u = 1 in the source group, no certifies u != 1.
SemiDecision mihailova_probe(const MihailovaInstance& instance, const Word& u,
                             const Budget& budget);

}  // namespace subconj
