#pragma once

// Finite permutation quotients and con-separation witnesses.

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "subconj/homomorphism.hpp"
#include "subconj/perm.hpp"
#include "subconj/presentation.hpp"
#include "subconj/stallings.hpp"
#include "subconj/word.hpp"

namespace subconj {

// A finite set of permutations closed under products, kept both sorted (for
// deterministic iteration) and hashed (for membership).
class PermGroup {
 public:
  explicit PermGroup(std::vector<Permutation> sorted_elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const { return lookup_.contains(p); }
  const std::unordered_set<Permutation>& as_set() const { return lookup_; }

 private:
  std::vector<Permutation> elements_;
  std::unordered_set<Permutation> lookup_;
};

// Certifies that H2 is not conjugate into H1 in G: no c in group_image
// satisfies c^-1 * h2_image * c ⊆ h1_image.
struct Witness {
  Homomorphism hom;
  PermGroup group_image;
  PermGroup h1_image;
  PermGroup h2_image;
};

// Calls visit for every assignment of degree-k permutations to generators
// under which every relator evaluates to the identity, in lexicographic
// order of image tuples (generator 0 most significant, permutations ordered
// by image sequence).  Assignments are pruned as soon as a relator whose
// generators are all assigned fails.  Stops when visit returns false.
void enumerate_homs(const Presentation& pres, std::size_t degree,
                    const std::function<bool(const Homomorphism&)>& visit);
std::vector<Homomorphism> all_homs(const Presentation& pres, std::size_t degree);

// Subgroup generated by the images of gens (identity included).
PermGroup image_closure(const Homomorphism& hom, const std::vector<Word>& gens);
// Image of the whole group: closure of all generator images.
PermGroup group_image(const Homomorphism& hom);

// First c in group (in sorted order) with c^-1 B c ⊆ A, if any.
std::optional<Permutation> finite_into_conjugate(const PermGroup& group, const PermGroup& a,
                                                 const PermGroup& b);

// Witness at exactly this degree: the first hom under which the image of H2
// is not conjugate into the image of H1.
std::optional<Witness> find_witness_at_degree(const Presentation& pres,
                                              const std::vector<Word>& h1_gens,
                                              const std::vector<Word>& h2_gens,
                                              std::size_t degree);
// Scans degrees 1..max_degree; the first witness in (degree, lex) order.
std::optional<Witness> find_witness(const Presentation& pres, const std::vector<Word>& h1_gens,
                                    const std::vector<Word>& h2_gens, std::size_t max_degree);

// Re-derives the witness property from scratch.
bool certify_witness(const Presentation& pres, const Homomorphism& hom,
                     const std::vector<Word>& h1_gens, const std::vector<Word>& h2_gens);

// H1 * ker(hom) as a subgroup graph of the free group.
SubgroupGraph witness_subgroup(const Alphabet& alphabet, const Homomorphism& hom,
                               const std::vector<Word>& h1_gens);

// True iff some c in G1 has (gens)^c ⊆ D.  Requires D ≤ G1, both of finite
// index.  Decided by scanning the vertices of D lying over the base of G1.
bool conjugate_into_within(const SubgroupGraph& g1, const SubgroupGraph& d,
                           const std::vector<Word>& gens);

// Intersection of per-coset witnesses D_i ≤ G1.  per_coset[i] corresponds
// to coset_reps(g1)[i] = x_i; the left coset representative is x_i^-1, so
// D_i must separate H1 from H2^(x_i^-1) within G1 when that conjugate lies
// in G1, and must equal G1 otherwise.  Throws InputError naming i when a D_i
// fails that check; the result is verified before returning.
SubgroupGraph combine_witnesses(const Alphabet& alphabet, const SubgroupGraph& g1,
                                const std::vector<Word>& h1_gens,
                                const std::vector<Word>& h2_gens,
                                const std::vector<SubgroupGraph>& per_coset);

// Builds the per-coset witnesses combine_witnesses expects by searching free
// group homs of degree <= max_degree: D_i = (H1 * ker phi) ∩ G1.  Returns
// nullopt if some coset has no witness within the budget.
std::optional<std::vector<SubgroupGraph>> find_coset_witnesses(
    const Alphabet& alphabet, const SubgroupGraph& g1, const std::vector<Word>& h1_gens,
    const std::vector<Word>& h2_gens, std::size_t max_degree);

}  // namespace subconj
