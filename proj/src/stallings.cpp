#include "subconj/stallings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "subconj/error.hpp"

namespace subconj {

LabeledGraph LabeledGraph::wedge(const std::vector<Word>& words) {
  LabeledGraph g;
  g.vertex_count = 1;
  g.base = 0;
  for (const Word& w : words) {
    if (w.empty()) {
      continue;
    }
    Vertex cur = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Vertex nxt = 0;
      if (i + 1 < w.size()) {
        nxt = static_cast<Vertex>(g.vertex_count++);
      }
      Letter l = w[i];
      if (l.is_inverse()) {
        g.edges.push_back({nxt, cur, l.generator()});
      } else {
        g.edges.push_back({cur, nxt, l.generator()});
      }
      cur = nxt;
    }
  }
  return g;
}

namespace {

std::size_t max_label(const LabeledGraph& g) {
  std::size_t r = 0;
  for (const Edge& e : g.edges) {
    r = std::max<std::size_t>(r, e.label + 1);
  }
  return r;
}

// Union-find folding.  Every class root keeps one target per letter code;
// a second edge with the same code queues a merge of the two targets.
// Union by size bounds the total slot-transfer work by O(E log V * rank).
class Folder {
 public:
  Folder(std::size_t n, std::size_t rank)
      : codes_(2 * rank), parent_(n), size_(n, 1), slot_(n * codes_, kNoVertex) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void add_edge(const Edge& e) {
    attach(find(e.src), 2 * e.label, e.dst);
    attach(find(e.dst), 2 * e.label + 1, e.src);
  }

  void run(std::mt19937_64* rng) {
    while (!pending_.empty()) {
      std::pair<Vertex, Vertex> job;
      if (rng != nullptr) {
        std::uniform_int_distribution<std::size_t> pick(0, pending_.size() - 1);
        std::size_t i = pick(*rng);
        std::swap(pending_[i], pending_.back());
      }
      job = pending_.back();
      pending_.pop_back();
      merge(job.first, job.second);
    }
  }

  Vertex target(Vertex root, std::size_t code) { return slot_[root * codes_ + code]; }

 private:
  void attach(Vertex root, std::size_t code, Vertex target) {
    Vertex& s = slot_[root * codes_ + code];
    if (s == kNoVertex) {
      s = target;
    } else {
      pending_.emplace_back(s, target);
    }
  }

  void merge(Vertex x, Vertex y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return;
    }
    if (size_[x] < size_[y]) {
      std::swap(x, y);
    }
    parent_[y] = x;
    size_[x] += size_[y];
    for (std::size_t c = 0; c < codes_; ++c) {
      Vertex t = slot_[y * codes_ + c];
      if (t != kNoVertex) {
        attach(x, c, t);
      }
    }
  }

  std::size_t codes_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
  std::vector<Vertex> slot_;
  std::vector<std::pair<Vertex, Vertex>> pending_;
};

}  // namespace

LabeledGraph fold(const LabeledGraph& g, std::uint64_t shuffle_seed) {
  const std::size_t rank = std::max<std::size_t>(max_label(g), 1);
  for (const Edge& e : g.edges) {
    if (e.src >= g.vertex_count || e.dst >= g.vertex_count) {
      throw InputError("edge endpoint out of range");
    }
  }
  if (g.base >= g.vertex_count) {
    throw InputError("base vertex out of range");
  }
  Folder folder(g.vertex_count, rank);
  std::mt19937_64 rng(shuffle_seed);
  std::vector<std::size_t> order(g.edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (shuffle_seed != 0) {
    std::shuffle(order.begin(), order.end(), rng);
  }
  for (std::size_t i : order) {
    folder.add_edge(g.edges[i]);
    if (shuffle_seed != 0 && (rng() & 1u)) {
      folder.run(&rng);
    }
  }
  folder.run(shuffle_seed != 0 ? &rng : nullptr);

  // Relabel the base component in BFS order.
  LabeledGraph out;
  std::unordered_map<Vertex, Vertex> id;
  std::vector<Vertex> queue{folder.find(g.base)};
  id.emplace(queue.front(), 0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex root = queue[qi];
    for (std::size_t c = 0; c < 2 * rank; ++c) {
      Vertex t = folder.target(root, c);
      if (t == kNoVertex) {
        continue;
      }
      t = folder.find(t);
      if (id.emplace(t, static_cast<Vertex>(queue.size())).second) {
        queue.push_back(t);
      }
    }
  }
  out.vertex_count = queue.size();
  out.base = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::uint32_t label = 0; label < rank; ++label) {
      Vertex t = folder.target(queue[qi], 2 * label);
      if (t != kNoVertex) {
        out.edges.push_back({static_cast<Vertex>(qi), id.at(folder.find(t)), label});
      }
    }
  }
  return out;
}

LabeledGraph based_core(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count;
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    ++degree[e.src];
    ++degree[e.dst];
    incident[e.src].push_back(i);
    if (e.dst != e.src) {
      incident[e.dst].push_back(i);
    }
  }
  std::vector<bool> removed(n, false);
  std::vector<bool> edge_removed(g.edges.size(), false);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (v != g.base && degree[v] <= 1) {
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    if (removed[v]) {
      continue;
    }
    removed[v] = true;
    for (std::size_t ei : incident[v]) {
      if (edge_removed[ei]) {
        continue;
      }
      edge_removed[ei] = true;
      const Edge& e = g.edges[ei];
      Vertex other = e.src == v ? e.dst : e.src;
      --degree[v];
      if (--degree[other] <= 1 && other != g.base && !removed[other]) {
        queue.push_back(other);
      }
    }
  }
  LabeledGraph out;
  std::vector<Vertex> id(n, kNoVertex);
  Vertex next_id = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      id[v] = next_id++;
    }
  }
  out.vertex_count = next_id;
  out.base = id[g.base];
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (!edge_removed[i]) {
      const Edge& e = g.edges[i];
      out.edges.push_back({id[e.src], id[e.dst], e.label});
    }
  }
  return out;
}

SubgroupGraph::SubgroupGraph(std::size_t rank)
    : SubgroupGraph(rank, 1, std::vector<Vertex>(2 * rank, kNoVertex)) {
  if (rank == 0) {
    throw InputError("rank must be at least 1");
  }
}

SubgroupGraph::SubgroupGraph(std::size_t rank, std::size_t vertex_count,
                             std::vector<Vertex> table)
    : rank_(rank), vertex_count_(vertex_count), edge_count_(0), table_(std::move(table)) {
  for (std::size_t i = 0; i < table_.size(); i += 2) {
    edge_count_ += table_[i] != kNoVertex ? 1 : 0;
  }
}

SubgroupGraph SubgroupGraph::canonical(const LabeledGraph& g, std::size_t rank) {
  const std::size_t codes = 2 * rank;
  std::vector<Vertex> raw(g.vertex_count * codes, kNoVertex);
  auto set_slot = [&](Vertex v, std::size_t code, Vertex t) {
    Vertex& s = raw[v * codes + code];
    if (s != kNoVertex && s != t) {
      throw std::logic_error("graph is not folded");
    }
    s = t;
  };
  for (const Edge& e : g.edges) {
    set_slot(e.src, 2 * e.label, e.dst);
    set_slot(e.dst, 2 * e.label + 1, e.src);
  }
  std::vector<Vertex> id(g.vertex_count, kNoVertex);
  std::vector<Vertex> order{g.base};
  id[g.base] = 0;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    Vertex v = order[qi];
    for (std::size_t c = 0; c < codes; ++c) {
      Vertex t = raw[v * codes + c];
      if (t != kNoVertex && id[t] == kNoVertex) {
        id[t] = static_cast<Vertex>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<Vertex> table(order.size() * codes, kNoVertex);
  for (std::size_t nv = 0; nv < order.size(); ++nv) {
    for (std::size_t c = 0; c < codes; ++c) {
      Vertex t = raw[order[nv] * codes + c];
      if (t != kNoVertex) {
        table[nv * codes + c] = id[t];
      }
    }
  }
  return SubgroupGraph(rank, order.size(), std::move(table));
}

SubgroupGraph SubgroupGraph::from_labeled(const LabeledGraph& g, std::size_t rank,
                                          std::uint64_t shuffle_seed) {
  if (rank == 0) {
    throw InputError("rank must be at least 1");
  }
  if (max_label(g) > rank) {
    throw InputError("edge label outside the alphabet");
  }
  return canonical(based_core(fold(g, shuffle_seed)), rank);
}

std::size_t SubgroupGraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (std::size_t c = 0; c < 2 * rank_; ++c) {
    d += table_[v * 2 * rank_ + c] != kNoVertex ? 1 : 0;
  }
  return d;
}

std::optional<Vertex> SubgroupGraph::read(Vertex from, const Word& w) const {
  Vertex cur = from;
  for (Letter l : w) {
    if (l.generator() >= rank_) {
      return std::nullopt;
    }
    cur = next(cur, l);
    if (cur == kNoVertex) {
      return std::nullopt;
    }
  }
  return cur;
}

bool SubgroupGraph::contains(const Word& w) const {
  auto end = read(base(), w);
  return end && *end == base();
}

std::vector<Edge> SubgroupGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < vertex_count_; ++v) {
    for (std::uint32_t label = 0; label < rank_; ++label) {
      Vertex t = next(v, Letter(label, false));
      if (t != kNoVertex) {
        out.push_back({v, t, label});
      }
    }
  }
  return out;
}

LabeledGraph SubgroupGraph::to_labeled() const {
  LabeledGraph g;
  g.vertex_count = vertex_count_;
  g.base = 0;
  g.edges = edges();
  return g;
}

SubgroupGraph::SpanningTree SubgroupGraph::spanning_tree() const {
  SpanningTree tree;
  tree.parent.assign(vertex_count_, kNoVertex);
  tree.parent_letter.assign(vertex_count_, Letter{});
  tree.depth.assign(vertex_count_, 0);
  std::vector<bool> seen(vertex_count_, false);
  std::vector<Vertex> queue{0};
  seen[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex v = queue[qi];
    for (std::uint32_t c = 0; c < 2 * rank_; ++c) {
      Letter l = Letter::from_code(c);
      Vertex t = next(v, l);
      if (t != kNoVertex && !seen[t]) {
        seen[t] = true;
        tree.parent[t] = v;
        tree.parent_letter[t] = l;
        tree.depth[t] = tree.depth[v] + 1;
        queue.push_back(t);
      }
    }
  }
  return tree;
}

Word SubgroupGraph::tree_path(const SpanningTree& tree, Vertex v) {
  std::vector<Letter> reversed;
  while (tree.parent[v] != kNoVertex) {
    reversed.push_back(tree.parent_letter[v]);
    v = tree.parent[v];
  }
  std::reverse(reversed.begin(), reversed.end());
  return Word(std::move(reversed));
}

SubgroupGraph build_subgroup_graph(std::size_t rank, const std::vector<Word>& generators) {
  for (const Word& w : generators) {
    if (w.min_rank() > rank) {
      throw InputError("generator uses a letter outside the alphabet");
    }
  }
  return SubgroupGraph::from_labeled(LabeledGraph::wedge(generators), rank);
}

SubgroupGraph build_subgroup_graph(const Alphabet& alphabet, const std::vector<Word>& generators) {
  return build_subgroup_graph(alphabet.rank(), generators);
}

CyclicCore cyclic_core(const SubgroupGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t codes = 2 * g.rank();
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1) {
      queue.push_back(v);
    }
  }
  std::vector<bool> removed(n, false);
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    if (removed[v]) {
      continue;
    }
    removed[v] = true;
    for (std::uint32_t c = 0; c < codes; ++c) {
      Vertex t = g.next(v, Letter::from_code(c));
      if (t != kNoVertex && !removed[t] && --degree[t] <= 1) {
        queue.push_back(t);
      }
    }
  }
  CyclicCore core;
  core.in_core.assign(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      core.in_core[v] = true;
      core.vertices.push_back(v);
    }
  }
  for (Vertex v : core.vertices) {
    for (std::uint32_t label = 0; label < g.rank(); ++label) {
      Vertex t = g.next(v, Letter(label, false));
      if (t != kNoVertex && core.in_core[t]) {
        ++core.edge_count;
      }
    }
  }
  return core;
}

bool contains(const SubgroupGraph& g, const Word& w) { return g.contains(w); }

bool reads_loop_at(const SubgroupGraph& g, const CyclicCore& core, Vertex v, const Word& w) {
  if (!core.contains(v)) {
    return false;
  }
  Vertex cur = v;
  for (Letter l : w) {
    if (l.generator() >= g.rank()) {
      return false;
    }
    cur = g.next(cur, l);
    if (cur == kNoVertex || !core.in_core[cur]) {
      return false;
    }
  }
  return cur == v;
}

std::optional<std::size_t> index(const SubgroupGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2 * g.rank()) {
      return std::nullopt;
    }
  }
  return g.vertex_count();
}

std::size_t rank(const SubgroupGraph& g) { return g.edge_count() + 1 - g.vertex_count(); }

std::vector<Word> basis(const SubgroupGraph& g) {
  auto tree = g.spanning_tree();
  std::vector<Word> out;
  for (const Edge& e : g.edges()) {
    const Letter fwd(e.label, false);
    bool tree_edge = (tree.parent[e.dst] == e.src && tree.parent_letter[e.dst] == fwd) ||
                     (tree.parent[e.src] == e.dst && tree.parent_letter[e.src] == fwd.inverse());
    if (tree_edge) {
      continue;
    }
    out.push_back(SubgroupGraph::tree_path(tree, e.src) * Word{fwd} *
                  invert(SubgroupGraph::tree_path(tree, e.dst)));
  }
  return out;
}

SubgroupGraph intersect(const SubgroupGraph& g1, const SubgroupGraph& g2) {
  if (g1.rank() != g2.rank()) {
    throw InputError("cannot intersect subgroups of free groups of different rank");
  }
  const std::size_t rank = g1.rank();
  auto key = [](Vertex a, Vertex b) { return (static_cast<std::uint64_t>(a) << 32) | b; };
  std::unordered_map<std::uint64_t, Vertex> id;
  std::vector<std::pair<Vertex, Vertex>> states{{0, 0}};
  id.emplace(key(0, 0), 0);
  LabeledGraph product;
  for (std::size_t qi = 0; qi < states.size(); ++qi) {
    auto [p, q] = states[qi];
    for (std::uint32_t c = 0; c < 2 * rank; ++c) {
      Letter l = Letter::from_code(c);
      Vertex tp = g1.next(p, l);
      Vertex tq = g2.next(q, l);
      if (tp == kNoVertex || tq == kNoVertex) {
        continue;
      }
      auto [it, fresh] = id.emplace(key(tp, tq), static_cast<Vertex>(states.size()));
      if (fresh) {
        states.emplace_back(tp, tq);
      }
      if (!l.is_inverse()) {
        product.edges.push_back({static_cast<Vertex>(qi), it->second, l.generator()});
      }
    }
  }
  product.vertex_count = states.size();
  product.base = 0;
  return SubgroupGraph::from_labeled(product, rank);
}

SubgroupGraph schreier_graph(const Alphabet& alphabet, const Homomorphism& hom,
                             const std::unordered_set<Permutation>& image_subgroup) {
  if (hom.rank() != alphabet.rank()) {
    throw InputError("homomorphism rank does not match the alphabet");
  }
  const Permutation identity(hom.degree());
  if (!image_subgroup.contains(identity)) {
    throw InputError("image subgroup does not contain the identity");
  }
  for (const auto& x : image_subgroup) {
    if (x.degree() != hom.degree()) {
      throw InputError("image subgroup element has the wrong degree");
    }
    if (!image_subgroup.contains(x.inverse())) {
      throw InputError("image subgroup is not closed under inverses");
    }
    for (const auto& y : image_subgroup) {
      if (!image_subgroup.contains(x * y)) {
        throw InputError("image subgroup is not closed under products");
      }
    }
  }
  std::vector<Permutation> subgroup(image_subgroup.begin(), image_subgroup.end());
  auto coset_key = [&](const Permutation& x) {
    Permutation best = subgroup.front() * x;
    for (std::size_t i = 1; i < subgroup.size(); ++i) {
      Permutation y = subgroup[i] * x;
      if (y < best) {
        best = std::move(y);
      }
    }
    return best;
  };
  std::unordered_map<Permutation, Vertex> id;
  std::vector<Permutation> reps{identity};
  id.emplace(coset_key(identity), 0);
  LabeledGraph g;
  for (std::size_t qi = 0; qi < reps.size(); ++qi) {
    for (std::uint32_t label = 0; label < alphabet.rank(); ++label) {
      Permutation next = reps[qi] * hom.images()[label];
      auto [it, fresh] = id.emplace(coset_key(next), static_cast<Vertex>(reps.size()));
      if (fresh) {
        reps.push_back(std::move(next));
      }
      g.edges.push_back({static_cast<Vertex>(qi), it->second, label});
    }
  }
  g.vertex_count = reps.size();
  g.base = 0;
  return SubgroupGraph::from_labeled(g, alphabet.rank());
}

std::vector<Word> coset_reps(const SubgroupGraph& g) {
  if (!index(g)) {
    throw InputError("infinite index");
  }
  std::vector<Word> reps(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> queue{0};
  seen[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex v = queue[qi];
    for (std::uint32_t label = 0; label < g.rank(); ++label) {
      Letter l(label, false);
      Vertex t = g.next(v, l);
      if (!seen[t]) {
        seen[t] = true;
        reps[t] = reps[v] * Word{l};
        queue.push_back(t);
      }
    }
  }
  return reps;
}

Homomorphism coset_action(const SubgroupGraph& g) {
  auto n = index(g);
  if (!n) {
    throw InputError("infinite index");
  }
  if (*n > simd::kMaxDegree) {
    throw InputError("index " + std::to_string(*n) + " exceeds the maximum permutation degree");
  }
  std::vector<Permutation> images;
  for (std::uint32_t label = 0; label < g.rank(); ++label) {
    std::vector<std::size_t> map(*n);
    for (Vertex v = 0; v < *n; ++v) {
      map[v] = g.next(v, Letter(label, false));
    }
    images.push_back(Permutation::from_images(map));
  }
  return Homomorphism(*n, std::move(images));
}

SubgroupGraph conjugate_subgroup(const SubgroupGraph& g, const Word& c) {
  std::vector<Word> gens;
  for (const Word& w : basis(g)) {
    gens.push_back(conjugate(w, c));
  }
  return build_subgroup_graph(g.rank(), gens);
}

}  // namespace subconj
