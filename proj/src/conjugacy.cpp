#include "subconj/conjugacy.hpp"

#include <limits>
#include <stdexcept>

#include "subconj/error.hpp"
#include "subconj/presentation.hpp"

namespace subconj {

namespace {

void check_inputs(const Alphabet& alphabet, const std::vector<Word>& words,
                  const SubgroupGraph* graph) {
  if (graph != nullptr && graph->rank() != alphabet.rank()) {
    throw InputError("alphabet mismatch: subgroup graph has rank " +
                     std::to_string(graph->rank()) + ", alphabet has rank " +
                     std::to_string(alphabet.rank()));
  }
  check_words(alphabet.rank(), words, "generator");
}

// Length of the common suffix of p and the tree path to v: the letters that
// cancel in p * path(v)^-1.
std::size_t cancelled_suffix(const Word& p, const SubgroupGraph::SpanningTree& tree, Vertex v) {
  std::size_t k = 0;
  while (k < p.size() && tree.parent[v] != kNoVertex &&
         tree.parent_letter[v] == p[p.size() - 1 - k]) {
    v = tree.parent[v];
    ++k;
  }
  return k;
}

std::vector<Word> conjugate_all(const std::vector<Word>& gens, const Word& c) {
  std::vector<Word> out;
  out.reserve(gens.size());
  for (const Word& w : gens) {
    out.push_back(conjugate(w, c));
  }
  return out;
}

}  // namespace

ConjugacyAnswer into_conjugator(const Alphabet& alphabet, const std::vector<Word>& h1_gens,
                                const SubgroupGraph& h2) {
  check_inputs(alphabet, h1_gens, &h2);
  std::vector<Word> gens;
  for (const Word& w : h1_gens) {
    if (!w.empty()) {
      gens.push_back(w);
    }
  }
  ConjugacyAnswer answer;
  if (gens.empty()) {
    answer.yes = true;
    answer.conjugator = Word{};
    return answer;
  }

  // Conjugate H1 by p so that its first generator is cyclically reduced.
  const Word prefix = cyclic_reduce(gens.front()).prefix;
  const std::vector<Word> shifted = conjugate_all(gens, prefix);

  const CyclicCore core = cyclic_core(h2);
  const auto tree = h2.spanning_tree();

  std::vector<Vertex> hits;
  for (Vertex v : core.vertices) {
    ++answer.checked_vertices;
    if (!reads_loop_at(h2, core, v, shifted.front())) {
      continue;
    }
    bool all = true;
    for (std::size_t i = 1; i < shifted.size() && all; ++i) {
      auto end = h2.read(v, shifted[i]);
      all = end && *end == v;
    }
    if (all) {
      hits.push_back(v);
    }
  }
  if (hits.empty()) {
    return answer;
  }

  // Loops at v are H2^t for t the tree path to v, so H1^(p t^-1) ≤ H2.
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  for (Vertex v : hits) {
    best_len = std::min(best_len, prefix.size() + tree.depth[v] - 2 * cancelled_suffix(prefix, tree, v));
  }
  std::optional<Word> best;
  for (Vertex v : hits) {
    if (prefix.size() + tree.depth[v] - 2 * cancelled_suffix(prefix, tree, v) != best_len) {
      continue;
    }
    Word g = prefix * invert(SubgroupGraph::tree_path(tree, v));
    if (!best || g < *best) {
      best = std::move(g);
    }
  }
  for (const Word& w : gens) {
    if (!h2.contains(conjugate(w, *best))) {
      throw std::logic_error("into_conjugator produced a conjugator that fails membership");
    }
  }
  answer.yes = true;
  answer.conjugator = std::move(best);
  return answer;
}

ConjugacyAnswer conjugator(const Alphabet& alphabet, const std::vector<Word>& h1_gens,
                           const std::vector<Word>& h2_gens) {
  check_inputs(alphabet, h1_gens, nullptr);
  check_inputs(alphabet, h2_gens, nullptr);
  const SubgroupGraph g1 = build_subgroup_graph(alphabet, h1_gens);
  const SubgroupGraph g2 = build_subgroup_graph(alphabet, h2_gens);
  ConjugacyAnswer forward = into_conjugator(alphabet, h1_gens, g2);
  if (!forward.yes) {
    return forward;
  }
  ConjugacyAnswer backward = into_conjugator(alphabet, h2_gens, g1);
  ConjugacyAnswer answer;
  answer.checked_vertices = forward.checked_vertices + backward.checked_vertices;
  if (!backward.yes) {
    return answer;
  }
  // Free groups admit no expanding inner automorphisms, so mutual
  // into-conjugacy forces H1^g = H2 exactly.
  if (build_subgroup_graph(alphabet, conjugate_all(h1_gens, *forward.conjugator)) != g2) {
    throw std::logic_error("mutual into-conjugacy without equality");
  }
  answer.yes = true;
  answer.conjugator = std::move(forward.conjugator);
  return answer;
}

ConjugacyAnswer element_into_conjugator(const Alphabet& alphabet, const Word& w,
                                        const SubgroupGraph& h) {
  return into_conjugator(alphabet, {w}, h);
}

}  // namespace subconj
