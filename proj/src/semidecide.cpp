#include "subconj/semidecide.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "subconj/stallings.hpp"

namespace subconj {

std::vector<Word> normal_closure_approximant(const Presentation& pres, std::size_t level) {
  std::vector<Word> rels;
  for (const Word& r : pres.relators) {
    if (!r.empty()) {
      rels.push_back(r);
      rels.push_back(invert(r));
    }
  }
  std::vector<Word> out;
  std::unordered_set<Word> seen;
  for (std::size_t len = 0; len <= level && !rels.empty(); ++len) {
    for_each_reduced_word(pres.rank(), len, [&](const Word& w) {
      for (const Word& r : rels) {
        Word c = conjugate(r, w);
        if (!c.empty() && seen.insert(c).second) {
          out.push_back(std::move(c));
        }
      }
      return true;
    });
  }
  return out;
}

namespace {

// Subgroup graphs of <h2_gens ∪ approximant(L)>, built on first use.
class LevelGraphs {
 public:
  LevelGraphs(const Presentation& pres, const std::vector<Word>& h2_gens)
      : pres_(pres), h2_gens_(h2_gens) {}

  const SubgroupGraph& at(std::size_t level) {
    // Without relators every level is the same subgroup.
    if (pres_.relators.empty()) {
      level = 0;
    }
    auto it = graphs_.find(level);
    if (it == graphs_.end()) {
      std::vector<Word> gens = h2_gens_;
      auto approx = normal_closure_approximant(pres_, level);
      gens.insert(gens.end(), approx.begin(), approx.end());
      it = graphs_.emplace(level, build_subgroup_graph(pres_.alphabet, gens)).first;
    }
    return it->second;
  }

 private:
  const Presentation& pres_;
  const std::vector<Word>& h2_gens_;
  std::map<std::size_t, SubgroupGraph> graphs_;
};

bool conjugates_into(const SubgroupGraph& k, const std::vector<Word>& h1_gens, const Word& g) {
  return std::all_of(h1_gens.begin(), h1_gens.end(),
                     [&](const Word& u) { return k.contains(conjugate(u, g)); });
}

}  // namespace

bool certify_yes(const Presentation& pres, const std::vector<Word>& h1_gens,
                 const std::vector<Word>& h2_gens, const Word& g, std::size_t level) {
  std::vector<Word> gens = h2_gens;
  auto approx = normal_closure_approximant(pres, level);
  gens.insert(gens.end(), approx.begin(), approx.end());
  return conjugates_into(build_subgroup_graph(pres.alphabet, gens), h1_gens, g);
}

SemiDecision semi_decide_into(const Presentation& pres, const std::vector<Word>& h1_gens,
                              const std::vector<Word>& h2_gens, const Budget& budget) {
  check_words(pres.rank(), h1_gens, "H1 generator");
  check_words(pres.rank(), h2_gens, "H2 generator");
  SemiDecision result;
  LevelGraphs graphs(pres, h2_gens);
  const std::size_t last_diagonal = budget.max_conj_len + budget.max_level;

  for (std::size_t round = 0;; ++round) {
    const bool no_side = round < budget.max_degree;
    const bool yes_side = round <= last_diagonal;
    if (!no_side && !yes_side) {
      break;
    }
    if (no_side) {
      const std::size_t degree = round + 1;
      result.spent.max_degree = degree;
      // The image of H1 must fail to conjugate into the image of H2.
      if (auto w = find_witness_at_degree(pres, h2_gens, h1_gens, degree)) {
        result.status = Status::no;
        result.witness = std::move(w);
        return result;
      }
    }
    if (yes_side) {
      const std::size_t diagonal = round;
      for (std::size_t len = 0; len <= std::min(diagonal, budget.max_conj_len); ++len) {
        const std::size_t level = diagonal - len;
        if (level > budget.max_level) {
          continue;
        }
        result.spent.conjugator_length = std::max(result.spent.conjugator_length, len);
        result.spent.approximant_level = std::max(result.spent.approximant_level, level);
        const SubgroupGraph& k = graphs.at(level);
        std::optional<Word> hit;
        for_each_reduced_word(pres.rank(), len, [&](const Word& g) {
          if (conjugates_into(k, h1_gens, g)) {
            hit = g;
            return false;
          }
          return true;
        });
        if (hit) {
          result.status = Status::yes;
          result.conjugator = std::move(hit);
          result.level = level;
          return result;
        }
      }
    }
  }
  return result;
}

MihailovaInstance mihailova_generators(const Presentation& h_pres) {
  const std::size_t s = h_pres.rank();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s; ++i) {
    names.push_back("a" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < s; ++i) {
    names.push_back("b" + std::to_string(i + 1));
  }
  auto a = [](std::size_t i, bool inv = false) { return Letter(static_cast<std::uint32_t>(i), inv); };
  auto b = [s](std::size_t i, bool inv = false) {
    return Letter(static_cast<std::uint32_t>(s + i), inv);
  };
  std::vector<Word> commutators;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      commutators.push_back(Word{a(i), b(j), a(i, true), b(j, true)});
    }
  }
  std::vector<Word> l_gens;
  for (std::size_t i = 0; i < s; ++i) {
    l_gens.push_back(Word{a(i), b(i)});
  }
  for (const Word& r : h_pres.relators) {
    std::vector<Letter> letters;
    for (Letter l : r) {
      letters.push_back(b(l.generator(), l.is_inverse()));
    }
    l_gens.emplace_back(std::move(letters));
  }
  return MihailovaInstance{Presentation(Alphabet(std::move(names)), std::move(commutators)),
                           std::move(l_gens), h_pres};
}

Word to_a_letters(const MihailovaInstance& instance, const Word& u) {
  check_words(instance.source.rank(), {u}, "probe word");
  // a_i has the same index as x_i.
  return u;
}

SemiDecision mihailova_probe(const MihailovaInstance& instance, const Word& u,
                             const Budget& budget) {
  return semi_decide_into(instance.ambient, {to_a_letters(instance, u)}, instance.l_gens,
                          budget);
}

}  // namespace subconj
