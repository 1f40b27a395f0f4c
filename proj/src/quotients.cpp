#include "subconj/quotients.hpp"

#include <algorithm>
#include <stdexcept>

#include "subconj/conjugacy.hpp"
#include "subconj/error.hpp"

namespace subconj {

PermGroup::PermGroup(std::vector<Permutation> sorted_elements)
    : elements_(std::move(sorted_elements)), lookup_(elements_.begin(), elements_.end()) {}

namespace {

Permutation evaluate_partial(const std::vector<Permutation>& images,
                             const std::vector<Permutation>& inverses, const Word& w,
                             std::size_t degree) {
  Permutation acc(degree);
  for (Letter l : w) {
    acc = acc * (l.is_inverse() ? inverses[l.generator()] : images[l.generator()]);
  }
  return acc;
}

std::vector<Word> conjugate_all(const std::vector<Word>& gens, const Word& c) {
  std::vector<Word> out;
  out.reserve(gens.size());
  for (const Word& w : gens) {
    out.push_back(conjugate(w, c));
  }
  return out;
}

bool all_contained(const SubgroupGraph& g, const std::vector<Word>& words) {
  return std::all_of(words.begin(), words.end(), [&](const Word& w) { return g.contains(w); });
}

}  // namespace

void enumerate_homs(const Presentation& pres, std::size_t degree,
                    const std::function<bool(const Homomorphism&)>& visit) {
  if (degree == 0) {
    throw InputError("degree must be at least 1");
  }
  const std::size_t rank = pres.rank();
  const std::vector<Permutation> perms = all_permutations(degree);
  // Relators checked once their highest generator has been assigned.
  std::vector<std::vector<const Word*>> due(rank);
  for (const Word& r : pres.relators) {
    if (!r.empty()) {
      due[r.min_rank() - 1].push_back(&r);
    }
  }
  std::vector<Permutation> images(rank, Permutation(degree));
  std::vector<Permutation> inverses(rank, Permutation(degree));
  std::vector<std::size_t> choice(rank, 0);
  std::size_t level = 0;
  // Iterative backtracking over generators; choice[level] is the next
  // candidate to try at that level.
  while (true) {
    if (choice[level] == perms.size()) {
      if (level == 0) {
        return;
      }
      choice[level] = 0;
      --level;
      continue;
    }
    images[level] = perms[choice[level]];
    inverses[level] = images[level].inverse();
    ++choice[level];
    bool ok = std::all_of(due[level].begin(), due[level].end(), [&](const Word* r) {
      return evaluate_partial(images, inverses, *r, degree).is_identity();
    });
    if (!ok) {
      continue;
    }
    if (level + 1 < rank) {
      ++level;
      continue;
    }
    if (!visit(Homomorphism(degree, images))) {
      return;
    }
  }
}

std::vector<Homomorphism> all_homs(const Presentation& pres, std::size_t degree) {
  std::vector<Homomorphism> out;
  enumerate_homs(pres, degree, [&](const Homomorphism& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

PermGroup image_closure(const Homomorphism& hom, const std::vector<Word>& gens) {
  std::vector<Permutation> images;
  images.reserve(gens.size());
  for (const Word& w : gens) {
    images.push_back(evaluate(hom, w));
  }
  return PermGroup(generate_group(hom.degree(), images));
}

PermGroup group_image(const Homomorphism& hom) {
  return PermGroup(generate_group(hom.degree(), hom.images()));
}

std::optional<Permutation> finite_into_conjugate(const PermGroup& group, const PermGroup& a,
                                                 const PermGroup& b) {
  for (const Permutation& c : group.elements()) {
    bool into = std::all_of(b.elements().begin(), b.elements().end(),
                            [&](const Permutation& x) { return a.contains(c.conjugate_of(x)); });
    if (into) {
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_witness_at_degree(const Presentation& pres,
                                              const std::vector<Word>& h1_gens,
                                              const std::vector<Word>& h2_gens,
                                              std::size_t degree) {
  check_words(pres.rank(), h1_gens, "H1 generator");
  check_words(pres.rank(), h2_gens, "H2 generator");
  std::optional<Witness> found;
  enumerate_homs(pres, degree, [&](const Homomorphism& hom) {
    PermGroup b = image_closure(hom, h2_gens);
    if (b.size() == 1) {
      return true;  // trivial image conjugates into anything
    }
    PermGroup a = image_closure(hom, h1_gens);
    PermGroup g = group_image(hom);
    if (finite_into_conjugate(g, a, b)) {
      return true;
    }
    found.emplace(Witness{hom, std::move(g), std::move(a), std::move(b)});
    return false;
  });
  return found;
}

std::optional<Witness> find_witness(const Presentation& pres, const std::vector<Word>& h1_gens,
                                    const std::vector<Word>& h2_gens, std::size_t max_degree) {
  for (std::size_t k = 1; k <= max_degree; ++k) {
    if (auto w = find_witness_at_degree(pres, h1_gens, h2_gens, k)) {
      return w;
    }
  }
  return std::nullopt;
}

bool certify_witness(const Presentation& pres, const Homomorphism& hom,
                     const std::vector<Word>& h1_gens, const std::vector<Word>& h2_gens) {
  if (hom.rank() != pres.rank()) {
    return false;
  }
  for (const Word& r : pres.relators) {
    if (!evaluate(hom, r).is_identity()) {
      return false;
    }
  }
  return !finite_into_conjugate(group_image(hom), image_closure(hom, h1_gens),
                                image_closure(hom, h2_gens));
}

SubgroupGraph witness_subgroup(const Alphabet& alphabet, const Homomorphism& hom,
                               const std::vector<Word>& h1_gens) {
  return schreier_graph(alphabet, hom, image_closure(hom, h1_gens).as_set());
}

bool conjugate_into_within(const SubgroupGraph& g1, const SubgroupGraph& d,
                           const std::vector<Word>& gens) {
  if (!index(g1) || !index(d)) {
    throw InputError("conjugacy within a subgroup requires finite index");
  }
  const auto tree = d.spanning_tree();
  for (Vertex t = 0; t < d.vertex_count(); ++t) {
    Word path = SubgroupGraph::tree_path(tree, t);
    if (!g1.contains(path)) {
      continue;  // the conjugator path^-1 would leave G1
    }
    bool loops = std::all_of(gens.begin(), gens.end(), [&](const Word& w) {
      auto end = d.read(t, w);
      return end && *end == t;
    });
    if (loops) {
      return true;
    }
  }
  return false;
}

SubgroupGraph combine_witnesses(const Alphabet& alphabet, const SubgroupGraph& g1,
                                const std::vector<Word>& h1_gens,
                                const std::vector<Word>& h2_gens,
                                const std::vector<SubgroupGraph>& per_coset) {
  check_words(alphabet.rank(), h1_gens, "H1 generator");
  check_words(alphabet.rank(), h2_gens, "H2 generator");
  if (g1.rank() != alphabet.rank()) {
    throw InputError("alphabet mismatch");
  }
  if (!index(g1)) {
    throw InputError("G1 must have finite index");
  }
  if (!all_contained(g1, h1_gens)) {
    throw InputError("H1 is not contained in G1");
  }
  const std::vector<Word> reps = coset_reps(g1);
  if (per_coset.size() != reps.size()) {
    throw InputError("expected " + std::to_string(reps.size()) + " per-coset witnesses, got " +
                     std::to_string(per_coset.size()));
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const SubgroupGraph& di = per_coset[i];
    auto fail = [&](const std::string& why) {
      throw InputError("per-coset witness " + std::to_string(i) + ": " + why);
    };
    if (di.rank() != alphabet.rank()) {
      fail("alphabet mismatch");
    }
    const std::vector<Word> conj = conjugate_all(h2_gens, invert(reps[i]));
    if (!all_contained(g1, conj)) {
      if (di != g1) {
        fail("conjugate of H2 leaves G1, so the witness must be G1 itself");
      }
      continue;
    }
    if (!index(di)) {
      fail("witness has infinite index");
    }
    if (!all_contained(g1, basis(di))) {
      fail("witness is not contained in G1");
    }
    if (!all_contained(di, h1_gens)) {
      fail("witness does not contain H1");
    }
    if (conjugate_into_within(g1, di, conj)) {
      fail("conjugate of H2 is conjugate into the witness within G1");
    }
  }
  SubgroupGraph d = per_coset.front();
  for (std::size_t i = 1; i < per_coset.size(); ++i) {
    d = intersect(d, per_coset[i]);
  }
  if (!all_contained(d, h1_gens) || into_conjugator(alphabet, h2_gens, d).yes) {
    throw std::logic_error("combined witness failed verification");
  }
  return d;
}

std::optional<std::vector<SubgroupGraph>> find_coset_witnesses(
    const Alphabet& alphabet, const SubgroupGraph& g1, const std::vector<Word>& h1_gens,
    const std::vector<Word>& h2_gens, std::size_t max_degree) {
  const std::vector<Word> reps = coset_reps(g1);
  const Presentation free_group = Presentation::free(alphabet);
  std::vector<SubgroupGraph> out;
  for (const Word& rep : reps) {
    const std::vector<Word> conj = conjugate_all(h2_gens, invert(rep));
    if (!all_contained(g1, conj)) {
      out.push_back(g1);
      continue;
    }
    std::optional<SubgroupGraph> found;
    for (std::size_t k = 1; k <= max_degree && !found; ++k) {
      enumerate_homs(free_group, k, [&](const Homomorphism& hom) {
        SubgroupGraph d = intersect(witness_subgroup(alphabet, hom, h1_gens), g1);
        if (conjugate_into_within(g1, d, conj)) {
          return true;
        }
        found.emplace(std::move(d));
        return false;
      });
    }
    if (!found) {
      return std::nullopt;
    }
    out.push_back(std::move(*found));
  }
  return out;
}

}  // namespace subconj
