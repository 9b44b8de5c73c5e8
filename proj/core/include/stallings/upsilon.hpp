#ifndef STALLINGS_UPSILON_HPP
#define STALLINGS_UPSILON_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "stallings/core_graph.hpp"

namespace stallings {

/// The pair graph of a core graph: one vertex per unordered pair of
/// distinct base vertices (C(v,2) of them), and one labeled directed edge
/// per unordered pair of distinct equally-labeled base edges
/// (sum_j C(e^j,2) of them), from the pair of origins to the pair of
/// termini. An edge whose endpoint pairs coincide is kept as a loop.
struct UpsilonGraph {
  struct Edge {
    int from;
    int to;
    int label;
  };

  int base_vertex_count = 0;
  std::vector<std::pair<int, int>> pairs;  // vertex id -> base pair, first < second
  std::vector<Edge> edges;

  std::size_t vertex_count() const { return pairs.size(); }
  std::size_t edge_count() const { return edges.size(); }
};

UpsilonGraph build_upsilon(const CoreGraph& g);

/// Connected components in the undirected sense (union-find).
int component_count(const UpsilonGraph& u);

/// No cycles, where a loop or a parallel/antiparallel edge pair counts as
/// a cycle; equivalently components == vertices - edges.
bool is_forest(const UpsilonGraph& u);

/// Number of distinct immediate quotients (canonical keys over all
/// single-pair merges).
std::size_t immediate_quotient_count(const CoreGraph& g);

/// Compares immediate quotients counted two ways: (a) distinct canonical
/// keys of merge_and_fold over all vertex pairs, (b) components of the
/// pair graph. Equality is guaranteed only when pi(H), phi(H) > rk(H);
/// the raw comparison is reported either way and callers check the
/// hypothesis themselves.
bool verify_correspondence(const CoreGraph& g);

}  // namespace stallings

#endif
