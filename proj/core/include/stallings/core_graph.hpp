#ifndef STALLINGS_CORE_GRAPH_HPP
#define STALLINGS_CORE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stallings/words.hpp"

namespace stallings {

struct Morphism;
struct FoldOptions {
  // When set, pending folds are processed in a randomized order; the
  // result must not change. Used by the confluence tests.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Result of tracing a word from the basepoint: either the final vertex,
/// or the index of the first letter that could not be traced.
struct TraceResult {
  bool complete;
  int vertex;             // end vertex when complete, last vertex reached otherwise
  std::size_t stuck_index;  // meaningful only when !complete
};

/// The core graph of a finitely generated subgroup of F_k: a pointed,
/// connected, folded, edge-labeled directed graph. For each label j there
/// is at most one outgoing and at most one incoming j-edge per vertex, so
/// the edge structure is a pair of partial injections per label.
///
/// Instances are immutable and always stored in a canonical numbering
/// (breadth-first from the basepoint, slots scanned label 1..k, outgoing
/// before incoming). Two graphs are isomorphic as pointed labeled graphs —
/// equivalently, correspond to the same subgroup — iff they compare equal.
class CoreGraph {
 public:
  static constexpr int kNoVertex = -1;

  /// Wedge of k loops: the graph of F_k itself.
  static CoreGraph wedge(int ambient_rank);
  /// Single basepoint, no edges: the trivial subgroup.
  static CoreGraph trivial(int ambient_rank);

  int ambient_rank() const { return k_; }
  int vertex_count() const { return vcount_; }
  int edge_count() const;
  int edge_count(int label) const;  // e^j, label 1-based
  int max_label_edge_count() const;

  /// rk(H) = edges - vertices + 1.
  int rank() const { return edge_count() - vcount_ + 1; }

  int out(int v, int label) const { return out_[static_cast<std::size_t>(v) * k_ + label - 1]; }
  int in(int v, int label) const { return in_[static_cast<std::size_t>(v) * k_ + label - 1]; }

  /// Number of incident edge endpoints (a loop contributes 2).
  int degree(int v) const;

  struct Edge {
    int from;
    int label;
    int to;
  };
  std::vector<Edge> edges() const;

  TraceResult trace(const Word& w) const;
  /// Membership test: w is in the subgroup iff its trace closes up at the
  /// basepoint.
  bool contains(const Word& w) const;

  /// Word spelled by the spanning-tree path from the basepoint to v.
  Word path_word(int v) const;
  /// Free basis of the subgroup: one word per non-tree edge, of the form
  /// p_u x_j p_t^{-1}. Size equals rank().
  std::vector<Word> subgroup_basis() const;

  /// Canonical line-oriented serialization: "k=<k> v=<v>" then one line
  /// "j u v" per edge. Doubles as the canonical key: equal text iff
  /// isomorphic pointed labeled graphs.
  const std::string& canonical_text() const { return key_; }

  friend bool operator==(const CoreGraph& a, const CoreGraph& b) {
    return a.key_ == b.key_;
  }

 private:
  CoreGraph(int k, int vcount, std::vector<int> out_flat, std::vector<int> in_flat);

  friend class FoldGraph;
  friend CoreGraph image_subgraph(const Morphism& m);

  int k_;
  int vcount_;
  std::vector<int> out_, in_;  // flat slot arrays, index v*k + (label-1)
  std::string key_;
};

/// Stallings folding: wedge of generator paths at a common basepoint,
/// folded to a fixed point. The result does not depend on fold order.
CoreGraph build_core_graph(const GeneratingSet& gens, const FoldOptions& options = {});

/// Immediate quotient: identify vertices u and v, then fold. If
/// `projection` is non-null it receives the induced vertex map from g to
/// the result. The result's subgroup is <H, p_u p_v^-1>.
CoreGraph merge_and_fold(const CoreGraph& g, int u, int v,
                         std::vector<int>* projection = nullptr);

/// A label- and basepoint-preserving graph map. Exists iff the source
/// subgroup is contained in the target subgroup, and is then unique.
struct Morphism {
  CoreGraph source;
  CoreGraph target;
  std::vector<int> vertex_map;
};

std::optional<Morphism> find_morphism(const CoreGraph& source, const CoreGraph& target);

/// The subgraph of the target spanned by image vertices and image edges;
/// again a core graph, covered by the source.
CoreGraph image_subgraph(const Morphism& m);

/// Handle number h(g, w) for w outside the subgroup: |w| - |p_w| - |s_w|
/// when positive, else 0, where p_w is the longest traceable prefix and
/// s_w the longest suffix traceable backwards into the basepoint.
/// h = 0 iff the extended graph is an immediate quotient of g; h > 0 iff
/// g is a proper subgraph of the extended graph.
int handle_number(const CoreGraph& g, const Word& w);

/// Canonical key realizing the subgroup <-> graph bijection.
inline const std::string& canonical_key(const CoreGraph& g) { return g.canonical_text(); }

}  // namespace stallings

#endif
