#ifndef STALLINGS_FRINGE_HPP
#define STALLINGS_FRINGE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stallings/core_graph.hpp"

namespace stallings {

struct FringeOptions {
  // Fringe size is superexponential in vertex count; enumeration stops
  // with an error rather than filling memory.
  std::size_t max_nodes = 100'000;
};

/// The sub-DAG of quotients below one core graph: every quotient of the
/// root, with an edge g -> q whenever q is an immediate quotient of g,
/// and BFS distances rho from the root.
class FringeDag {
 public:
  std::size_t size() const { return nodes_.size(); }
  const CoreGraph& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  const CoreGraph& root() const { return nodes_[0]; }
  int distance_of(int id) const { return distance_[static_cast<std::size_t>(id)]; }
  int rank_of(int id) const { return rank_[static_cast<std::size_t>(id)]; }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& predecessors(int id) const { return preds_[static_cast<std::size_t>(id)]; }
  const std::vector<int>& successors(int id) const { return succs_[static_cast<std::size_t>(id)]; }

  std::optional<int> find(const CoreGraph& g) const;
  /// rho_X(root, target), or nothing when the root does not cover target.
  std::optional<int> distance_to(const CoreGraph& target) const;

  std::map<int, std::vector<int>> nodes_by_rank() const;

 private:
  friend FringeDag enumerate_fringe(const CoreGraph& root, const FringeOptions& options);

  std::vector<CoreGraph> nodes_;
  std::vector<int> distance_;
  std::vector<int> rank_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> preds_, succs_;
  std::unordered_map<std::string, int> index_;
};

/// Breadth-first closure under merge_and_fold over all vertex pairs,
/// deduplicated by canonical key. BFS depth equals the quotient distance,
/// since every edge leads from depth d to depth at most d + 1.
FringeDag enumerate_fringe(const CoreGraph& root, const FringeOptions& options = {});

}  // namespace stallings

#endif
