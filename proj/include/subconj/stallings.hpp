#pragma once

// Stallings subgroup graphs of finitely generated subgroups of free groups.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_set>
#include <vector>

#include "subconj/homomorphism.hpp"
#include "subconj/perm.hpp"
#include "subconj/word.hpp"

namespace subconj {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex src;
  Vertex dst;
  std::uint32_t label;

  bool operator==(const Edge&) const = default;
};

// An arbitrary (possibly unfolded) based graph with edges labeled by
// generator indices.
struct LabeledGraph {
  std::size_t vertex_count = 1;
  std::vector<Edge> edges;
  Vertex base = 0;

  // Wedge of one closed path per word, all through the base vertex.
  static LabeledGraph wedge(const std::vector<Word>& words);
};

// Identifies same-labeled edges sharing an endpoint until the graph is
// deterministic and co-deterministic.  Only the component of the base is
// kept.  A nonzero shuffle_seed randomizes edge insertion and merge order,
// which must not change the result up to based isomorphism.
LabeledGraph fold(const LabeledGraph& g, std::uint64_t shuffle_seed = 0);

// Repeatedly deletes vertices other than the base of degree <= 1.
LabeledGraph based_core(const LabeledGraph& g);

// Folded based core graph in canonical form: vertices are numbered in BFS
// order from the base (vertex 0), exploring letters a, a^-1, b, b^-1, ...
// Two subgroups are equal iff their graphs compare equal.
class SubgroupGraph {
 public:
  // Graph of the trivial subgroup: one vertex, no edges.
  explicit SubgroupGraph(std::size_t rank);

  // Folds, takes the based core and canonicalizes an arbitrary graph.
  static SubgroupGraph from_labeled(const LabeledGraph& g, std::size_t rank,
                                    std::uint64_t shuffle_seed = 0);

  std::size_t rank() const { return rank_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }
  Vertex base() const { return 0; }

  // Target of the edge leaving v with letter l (an inverse letter follows an
  // edge backwards), or kNoVertex.
  Vertex next(Vertex v, Letter l) const {
    return table_[static_cast<std::size_t>(v) * 2 * rank_ + l.code()];
  }
  std::size_t degree(Vertex v) const;

  // End of the path reading w from `from`, or nullopt when an edge is missing.
  std::optional<Vertex> read(Vertex from, const Word& w) const;
  bool contains(const Word& w) const;

  // Edges sorted by (src, label).
  std::vector<Edge> edges() const;
  LabeledGraph to_labeled() const;

  // BFS spanning tree from the base, in canonical exploration order.
  // parent_letter[v] is the letter read on the tree edge into v.
  struct SpanningTree {
    std::vector<Vertex> parent;
    std::vector<Letter> parent_letter;
    std::vector<std::size_t> depth;
  };
  SpanningTree spanning_tree() const;
  // Word read along the tree path base -> v.
  static Word tree_path(const SpanningTree& tree, Vertex v);

  bool operator==(const SubgroupGraph&) const = default;

 private:
  SubgroupGraph(std::size_t rank, std::size_t vertex_count, std::vector<Vertex> table);
  static SubgroupGraph canonical(const LabeledGraph& folded_core, std::size_t rank);

  std::size_t rank_;
  std::size_t vertex_count_;
  std::size_t edge_count_;
  std::vector<Vertex> table_;  // vertex_count * 2 * rank, indexed by letter code
};

// The part of a subgroup graph met by cyclically reduced closed paths: what
// remains after repeatedly deleting vertices of degree <= 1, base included.
// Empty for the trivial subgroup.
struct CyclicCore {
  std::vector<bool> in_core;
  std::vector<Vertex> vertices;  // ascending
  std::size_t edge_count = 0;

  bool contains(Vertex v) const { return v < in_core.size() && in_core[v]; }
  bool empty() const { return vertices.empty(); }
};

SubgroupGraph build_subgroup_graph(const Alphabet& alphabet, const std::vector<Word>& generators);
SubgroupGraph build_subgroup_graph(std::size_t rank, const std::vector<Word>& generators);

CyclicCore cyclic_core(const SubgroupGraph& g);

bool contains(const SubgroupGraph& g, const Word& w);

// True iff w reads a closed path at v that never leaves the core.  Stops as
// soon as the path leaves the core.
bool reads_loop_at(const SubgroupGraph& g, const CyclicCore& core, Vertex v, const Word& w);

// Vertex count when g is a complete cover of the rose, otherwise nullopt
// (infinite index).
std::optional<std::size_t> index(const SubgroupGraph& g);

// |E| - |V| + 1.
std::size_t rank(const SubgroupGraph& g);

// Free basis from the spanning tree: one word per non-tree edge.
std::vector<Word> basis(const SubgroupGraph& g);

// Fiber product at (base, base), folded to its based core: H1 ∩ H2.
SubgroupGraph intersect(const SubgroupGraph& g1, const SubgroupGraph& g2);

// Schreier coset graph of image_subgroup in the group generated by the
// images of hom.  Represents the full preimage of image_subgroup.  Throws
// InputError if image_subgroup is not closed under products and inverses.
SubgroupGraph schreier_graph(const Alphabet& alphabet, const Homomorphism& hom,
                             const std::unordered_set<Permutation>& image_subgroup);

// One word per vertex, indexed by vertex id, each reading a path of positive
// letters from the base to that vertex.  Throws InputError("infinite index")
// if g is not a complete cover.
std::vector<Word> coset_reps(const SubgroupGraph& g);

// Action of the generators on the vertices of a finite-index graph:
// vertex v maps to next(v, x).  Degree = index(g).
Homomorphism coset_action(const SubgroupGraph& g);

// Graph of c^-1 H c.
SubgroupGraph conjugate_subgroup(const SubgroupGraph& g, const Word& c);

}  // namespace subconj
