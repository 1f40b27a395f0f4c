#pragma once

// Random instance generators and brute-force oracles shared by the unit
// tests and the acceptance suite.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "subconj/stallings.hpp"
#include "subconj/word.hpp"

namespace subconj::testing {

using Rng = std::mt19937_64;

inline Letter random_letter(Rng& rng, std::size_t rank) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(2 * rank - 1));
  return Letter::from_code(pick(rng));
}

// Reduced word of exactly `length` letters.
inline Word random_word_of_length(Rng& rng, std::size_t rank, std::size_t length) {
  std::vector<Letter> letters;
  while (letters.size() < length) {
    Letter l = random_letter(rng, rank);
    if (!letters.empty() && letters.back() == l.inverse()) {
      continue;
    }
    letters.push_back(l);
  }
  return Word(std::move(letters));
}

inline Word random_word(Rng& rng, std::size_t rank, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  return random_word_of_length(rng, rank, len(rng));
}

inline std::vector<Word> random_gens(Rng& rng, std::size_t rank, std::size_t max_count,
                                     std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> count(1, max_count);
  std::vector<Word> out;
  for (std::size_t n = count(rng); out.size() < n;) {
    out.push_back(random_word(rng, rank, 1, max_len));
  }
  return out;
}

// Random product of generators and their inverses, `factors` factors.
inline Word random_product(Rng& rng, const std::vector<Word>& gens, std::size_t factors) {
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  Word acc;
  for (std::size_t i = 0; i < factors; ++i) {
    const Word& g = gens[pick(rng)];
    acc *= (rng() & 1) ? g : invert(g);
  }
  return acc;
}

// Cancels adjacent inverse pairs in random order until none remain.
inline std::vector<Letter> reduce_in_random_order(std::vector<Letter> letters, Rng& rng) {
  while (true) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] == letters[i + 1].inverse()) {
        spots.push_back(i);
      }
    }
    if (spots.empty()) {
      return letters;
    }
    std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                  letters.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  }
}

// Exhaustive search for g with |g| <= max_len and every reduced g^-1 w g in
// H2, decided by membership alone.  The candidates are enumerated through
// x = g^-1 letter by letter.  Once x leaves the graph of H2 after its
// longest readable prefix q, the loops at the vertex x reaches in the
// covering tree are s^-1 (loops at q) s for the unread tail s, so a
// nontrivial w can only qualify when |w| > 2|s|.  Subtrees with a longer
// tail are skipped; every other candidate is checked with contains().
class IntoOracle {
 public:
  IntoOracle(const SubgroupGraph& h2, std::vector<Word> h1_gens)
      : h2_(h2), gens_(std::move(h1_gens)) {
    std::erase_if(gens_, [](const Word& w) { return w.empty(); });
    for (const Word& w : gens_) {
      shortest_ = std::min(shortest_, w.size());
    }
  }

  // True iff some candidate of length <= max_len works.
  bool search(std::size_t max_len) {
    tested_ = 0;
    if (gens_.empty()) {
      return true;
    }
    std::vector<Letter> x;
    return dfs(x, h2_.base(), 0, max_len);
  }

  std::size_t tested() const { return tested_; }
  const Word& found() const { return found_; }

 private:
  bool works(const std::vector<Letter>& x) {
    ++tested_;
    Word xw(x);
    Word g = invert(xw);
    for (const Word& w : gens_) {
      if (!h2_.contains(conjugate(w, g))) {
        return false;
      }
    }
    found_ = g;
    return true;
  }

  // `at` is the vertex reached by the readable prefix of x; `tail` counts the
  // letters read after leaving the graph.
  bool dfs(std::vector<Letter>& x, Vertex at, std::size_t tail, std::size_t max_len) {
    if (works(x)) {
      return true;
    }
    if (x.size() == max_len) {
      return false;
    }
    for (std::uint32_t code = 0; code < 2 * h2_.rank(); ++code) {
      Letter l = Letter::from_code(code);
      if (!x.empty() && x.back() == l.inverse()) {
        continue;
      }
      Vertex next = tail == 0 ? h2_.next(at, l) : kNoVertex;
      std::size_t next_tail = next == kNoVertex ? tail + 1 : 0;
      if (2 * next_tail > shortest_) {
        continue;
      }
      x.push_back(l);
      bool ok = dfs(x, next == kNoVertex ? at : next, next_tail, max_len);
      x.pop_back();
      if (ok) {
        return true;
      }
    }
    return false;
  }

  const SubgroupGraph& h2_;
  std::vector<Word> gens_;
  std::size_t shortest_ = static_cast<std::size_t>(-1);
  std::size_t tested_ = 0;
  Word found_;
};

// Conjugator-length bound for the oracle: prefix of the first nontrivial
// generator, plus the vertex count of H2's graph, plus the longest generator.
inline std::size_t oracle_bound(const SubgroupGraph& h2, const std::vector<Word>& h1_gens) {
  std::size_t prefix = 0;
  std::size_t longest = 0;
  bool first = true;
  for (const Word& w : h1_gens) {
    if (w.empty()) {
      continue;
    }
    if (first) {
      prefix = cyclic_reduce(w).prefix.size();
      first = false;
    }
    longest = std::max(longest, w.size());
  }
  return prefix + h2.vertex_count() + longest;
}

inline bool oracle_into(const SubgroupGraph& h2, const std::vector<Word>& h1_gens) {
  IntoOracle oracle(h2, h1_gens);
  return oracle.search(oracle_bound(h2, h1_gens));
}

}  // namespace subconj::testing
