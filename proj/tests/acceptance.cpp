// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "subconj/conjugacy.hpp"
#include "subconj/error.hpp"
#include "subconj/quotients.hpp"
#include "subconj/semidecide.hpp"
#include "support.hpp"

using namespace subconj;
using subconj::testing::Rng;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Word> conjugate_all(const std::vector<Word>& gens, const Word& c) {
  std::vector<Word> out;
  for (const Word& g : gens) {
    out.push_back(conjugate(g, c));
  }
  return out;
}

// A random Nielsen move keeps the subgroup but changes the generating set.
std::vector<Word> nielsen_shuffle(Rng& rng, std::vector<Word> gens) {
  if (gens.size() < 2) {
    return gens;
  }
  for (int step = 0; step < 3; ++step) {
    std::size_t i = rng() % gens.size();
    std::size_t j = (i + 1 + rng() % (gens.size() - 1)) % gens.size();
    switch (rng() % 3) {
      case 0: gens[i] = gens[i] * gens[j]; break;
      case 1: gens[i] = invert(gens[i]); break;
      default: std::swap(gens[i], gens[j]); break;
    }
  }
  return gens;
}

Homomorphism random_hom(Rng& rng, std::size_t rank, std::size_t degree) {
  std::vector<Permutation> images;
  for (std::size_t g = 0; g < rank; ++g) {
    std::vector<std::size_t> p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    images.push_back(Permutation::from_images(p));
  }
  return Homomorphism(degree, std::move(images));
}

// Stabilizer of point 0 under a permutation action, as a subgroup graph.
SubgroupGraph stabilizer_graph(const Homomorphism& hom) {
  LabeledGraph g;
  g.vertex_count = hom.degree();
  for (std::size_t gen = 0; gen < hom.rank(); ++gen) {
    for (std::size_t v = 0; v < hom.degree(); ++v) {
      g.edges.push_back({static_cast<Vertex>(v),
                         static_cast<Vertex>(hom.images()[gen](v)),
                         static_cast<std::uint32_t>(gen)});
    }
  }
  return SubgroupGraph::from_labeled(g, hom.rank());
}

Outcome oracle_equivalence() {
  Rng rng(1001);
  auto start = Clock::now();
  std::size_t instances = 0, yes = 0, mismatches = 0, bad_certs = 0;
  while (instances < 1200) {
    std::size_t r = 2 + instances % 2;
    Alphabet alpha(r);
    auto h1 = testing::random_gens(rng, r, 3, 6);
    auto h2 = testing::random_gens(rng, r, 3, 6);
    if (instances % 3 == 0) {
      // Planted yes: conjugates of elements of H2, kept within length 6.
      Word z = testing::random_word(rng, r, 0, 2);
      std::vector<Word> planted;
      for (std::size_t k = 0; k < 1 + rng() % 3; ++k) {
        Word x = conjugate(testing::random_product(rng, h2, 1 + rng() % 2), z);
        if (!x.empty() && x.size() <= 6) {
          planted.push_back(x);
        }
      }
      if (!planted.empty()) {
        h1 = planted;
      }
    }
    SubgroupGraph g2 = build_subgroup_graph(alpha, h2);
    if (cyclic_core(g2).vertices.size() > 8) {
      continue;
    }
    ++instances;
    ConjugacyAnswer ans = into_conjugator(alpha, h1, g2);
    if (ans.yes) {
      ++yes;
      for (const Word& x : h1) {
        bad_certs += !g2.contains(conjugate(x, *ans.conjugator));
      }
    }
    mismatches += ans.yes != testing::oracle_into(g2, h1);
  }
  double elapsed = seconds_since(start);
  std::string detail = std::to_string(instances) + " instances, " + std::to_string(yes) +
                       " yes, " + std::to_string(mismatches) + " mismatches, " +
                       std::to_string(bad_certs) + " bad certificates, " +
                       std::to_string(elapsed) + " s";
  return {mismatches == 0 && bad_certs == 0 && yes > 0 && yes < instances && elapsed < 60, detail};
}

Outcome conjugate_pairs() {
  Rng rng(1002);
  Alphabet ab(2);
  std::size_t conj_ok = 0, conj_total = 0;
  while (conj_total < 500) {
    auto h = testing::random_gens(rng, 2, 3, 6);
    Word z = testing::random_word(rng, 2, 0, 6);
    auto k = nielsen_shuffle(rng, conjugate_all(h, z));
    ++conj_total;
    ConjugacyAnswer ans = conjugator(ab, h, k);
    conj_ok += ans.yes && build_subgroup_graph(ab, conjugate_all(h, *ans.conjugator)) ==
                               build_subgroup_graph(ab, k);
  }
  std::size_t non_ok = 0, non_total = 0;
  while (non_total < 500) {
    auto h = testing::random_gens(rng, 2, 3, 6);
    auto k = testing::random_gens(rng, 2, 3, 6);
    bool hk = testing::oracle_into(build_subgroup_graph(ab, k), h);
    bool kh = testing::oracle_into(build_subgroup_graph(ab, h), k);
    if (hk && kh) {
      continue;
    }
    ++non_total;
    non_ok += !conjugator(ab, h, k).yes;
  }
  std::string detail = std::to_string(conj_ok) + "/" + std::to_string(conj_total) +
                       " conjugate pairs, " + std::to_string(non_ok) + "/" +
                       std::to_string(non_total) + " non-conjugate pairs";
  return {conj_ok == conj_total && non_ok == non_total, detail};
}

Outcome polynomial_scaling() {
  Rng rng(1003);
  Alphabet ab(2);
  const std::vector<Word> h1 = {parse_word(ab, "b a b^-1 a^-1 b"), parse_word(ab, "a a b")};
  std::vector<double> sizes, times;
  // A yes answer must re-validate; finite index alone does not force yes.
  bool answered = true;
  for (std::size_t n : {100u, 1000u, 10000u}) {
    // Degree exceeds the permutation type, so the cover is built directly:
    // a is the n-cycle v -> v + 1 and b a random bijection.
    std::vector<Vertex> shuffled(n);
    std::iota(shuffled.begin(), shuffled.end(), 0);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    LabeledGraph g;
    g.vertex_count = n;
    for (std::size_t v = 0; v < n; ++v) {
      g.edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n), 0});
      g.edges.push_back({static_cast<Vertex>(v), shuffled[v], 1});
    }
    SubgroupGraph cover = SubgroupGraph::from_labeled(g, 2);
    answered = answered && cover.vertex_count() == n;
    // Best of several repetitions, each repetition long enough to time.
    double best = 1e9;
    for (int rep = 0; rep < 5; ++rep) {
      std::size_t calls = 0;
      auto start = Clock::now();
      do {
        ConjugacyAnswer ans = into_conjugator(ab, h1, cover);
        if (ans.yes) {
          answered = answered && std::ranges::all_of(h1, [&](const Word& x) {
            return cover.contains(conjugate(x, *ans.conjugator));
          });
        }
        ++calls;
      } while (seconds_since(start) < 0.02);
      best = std::min(best, seconds_since(start) / calls);
    }
    sizes.push_back(static_cast<double>(n));
    times.push_back(best);
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    mx += std::log(sizes[i]) / 3;
    my += std::log(times[i]) / 3;
  }
  double num = 0, den = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    num += (std::log(sizes[i]) - mx) * (std::log(times[i]) - my);
    den += (std::log(sizes[i]) - mx) * (std::log(sizes[i]) - mx);
  }
  double slope = num / den;
  char buf[160];
  std::snprintf(buf, sizeof buf, "times %.3g/%.3g/%.3g s, log-log slope %.2f", times[0],
                times[1], times[2], slope);
  return {answered && slope <= 2.2 && times[2] < 1.0, buf};
}

Outcome schreier_index() {
  Rng rng(1004);
  std::size_t ok = 0, total = 0;
  for (std::size_t r : {2u, 3u}) {
    Alphabet alpha(r);
    for (int i = 0; i < 200; ++i) {
      Homomorphism hom = random_hom(rng, r, 1 + rng() % 5);
      SubgroupGraph kernel = schreier_graph(alpha, hom, {Permutation(hom.degree())});
      auto idx = index(kernel);
      ++total;
      ok += idx && *idx == group_image(hom).size() && rank(kernel) == 1 + *idx * (r - 1);
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " kernels"};
}

Outcome witness_round_trip() {
  Rng rng(1005);
  Alphabet ab(2);
  Presentation f2 = Presentation::free(ab);
  std::size_t found = 0, ok = 0, tries = 0;
  while (found < 120 && tries < 20000) {
    ++tries;
    auto h1 = testing::random_gens(rng, 2, 3, 5);
    auto h2 = testing::random_gens(rng, 2, 2, 5);
    auto wit = find_witness(f2, h1, h2, 4);
    if (!wit) {
      continue;
    }
    ++found;
    SubgroupGraph d = witness_subgroup(ab, wit->hom, h1);
    bool good = std::ranges::all_of(h1, [&](const Word& x) { return d.contains(x); });
    good = good && index(d) == wit->group_image.size() / wit->h1_image.size();
    good = good && !into_conjugator(ab, h2, d).yes;
    good = good && certify_witness(f2, coset_action(d), h1, h2);
    ok += good;
  }
  return {found >= 100 && ok == found,
          std::to_string(ok) + "/" + std::to_string(found) + " witnesses from " +
              std::to_string(tries) + " instances"};
}

Outcome coset_combination() {
  Rng rng(1006);
  Alphabet ab(2);
  std::size_t built = 0, ok = 0, tries = 0;
  std::size_t by_index[4] = {0, 0, 0, 0};
  while (built < 60 && tries < 5000) {
    ++tries;
    std::size_t n = 2 + tries % 2;
    Homomorphism action = random_hom(rng, 2, n);
    SubgroupGraph g1 = stabilizer_graph(action);
    if (index(g1) != n) {
      continue;
    }
    auto g1_basis = basis(g1);
    std::vector<Word> h1;
    for (std::size_t k = 0; k < 1 + rng() % 2; ++k) {
      Word x = testing::random_product(rng, g1_basis, 1 + rng() % 2);
      if (!x.empty()) {
        h1.push_back(x);
      }
    }
    auto h2 = testing::random_gens(rng, 2, 2, 4);
    if (h1.empty() || into_conjugator(ab, h2, build_subgroup_graph(ab, h1)).yes) {
      continue;
    }
    auto per = find_coset_witnesses(ab, g1, h1, h2, 4);
    if (!per) {
      continue;
    }
    ++built;
    ++by_index[n];
    try {
      SubgroupGraph d = combine_witnesses(ab, g1, h1, h2, *per);
      bool good = std::ranges::all_of(h1, [&](const Word& x) { return d.contains(x); });
      ok += good && !into_conjugator(ab, h2, d).yes;
    } catch (const InputError&) {
    }
  }
  return {built >= 50 && ok == built && by_index[2] > 0 && by_index[3] > 0,
          std::to_string(ok) + "/" + std::to_string(built) + " combinations (" +
              std::to_string(by_index[2]) + " of index 2, " + std::to_string(by_index[3]) +
              " of index 3) from " + std::to_string(tries) + " instances"};
}

Outcome mihailova_correspondence() {
  Rng rng(1007);
  Alphabet xs({"x1", "x2"});
  MihailovaInstance inst = mihailova_generators(Presentation(xs, {parse_word(xs, "x1")}));
  Budget budget{4, 2, 4};
  auto start = Clock::now();
  std::size_t yes_ok = 0;
  for (int i = 0; i < 20; ++i) {
    // Trivial word x2^e x2^-e with x1^{+-1} inserted at random positions.
    std::vector<Letter> raw;
    int e = static_cast<int>(rng() % 2);
    Letter y = Letter(1, rng() % 2 == 1);
    for (int k = 0; k < e; ++k) {
      raw.push_back(y);
    }
    for (int k = 0; k < e; ++k) {
      raw.push_back(y.inverse());
    }
    for (std::size_t k = 0; k < 1 + rng() % 2; ++k) {
      raw.insert(raw.begin() + rng() % (raw.size() + 1), Letter(0, rng() % 2 == 1));
    }
    Word u(raw);
    SemiDecision d = mihailova_probe(inst, u, budget);
    yes_ok += d.status == Status::yes &&
              certify_yes(inst.ambient, {to_a_letters(inst, u)}, inst.l_gens, *d.conjugator,
                          d.level);
  }
  std::size_t no_ok = 0;
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 1 + i % 3;
    Letter y = Letter(1, i % 2 == 1);
    Word u(std::vector<Letter>(n, y));
    SemiDecision d = mihailova_probe(inst, u, budget);
    no_ok += d.status == Status::no && d.witness && d.witness->hom.degree() <= 4 &&
             certify_witness(inst.ambient, d.witness->hom, inst.l_gens, {to_a_letters(inst, u)});
  }
  double elapsed = seconds_since(start);
  return {yes_ok == 20 && no_ok == 20 && elapsed < 300,
          std::to_string(yes_ok) + "/20 trivial words yes, " + std::to_string(no_ok) +
              "/20 nontrivial words no, " + std::to_string(elapsed) + " s"};
}

Outcome fold_confluence() {
  Rng rng(1008);
  std::size_t equal = 0;
  for (int i = 0; i < 1000; ++i) {
    std::size_t r = 2 + i % 2;
    auto gens = testing::random_gens(rng, r, 4, 10);
    LabeledGraph wedge = LabeledGraph::wedge(gens);
    equal += SubgroupGraph::from_labeled(wedge, r, 1 + rng()) ==
             SubgroupGraph::from_labeled(wedge, r, 1 + rng());
  }
  std::size_t members = 0;
  for (int i = 0; i < 10000; ++i) {
    std::size_t r = 2 + i % 2;
    auto gens = testing::random_gens(rng, r, 3, 6);
    SubgroupGraph g = build_subgroup_graph(r, gens);
    members += g.contains(testing::random_product(rng, gens, rng() % 8));
  }
  return {equal == 1000 && members == 10000,
          std::to_string(equal) + "/1000 fold orders agree, " + std::to_string(members) +
              "/10000 products contained"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 into_conjugator matches brute-force search", oracle_equivalence},
      {"2 conjugator decides conjugacy with equality", conjugate_pairs},
      {"3 into_conjugator scales polynomially", polynomial_scaling},
      {"4 Schreier index formula for kernels", schreier_index},
      {"5 witness subgroup round trip", witness_round_trip},
      {"6 per-coset witnesses combine", coset_combination},
      {"7 Mihailova probe detects the word problem", mihailova_correspondence},
      {"8 fold confluence and membership", fold_confluence},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
