#include "stallings/fringe.hpp"

#include <algorithm>
#include <set>

#include "stallings/errors.hpp"

namespace stallings {

std::optional<int> FringeDag::find(const CoreGraph& g) const {
  auto it = index_.find(g.canonical_text());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FringeDag::distance_to(const CoreGraph& target) const {
  auto id = find(target);
  if (!id) return std::nullopt;
  return distance_of(*id);
}

std::map<int, std::vector<int>> FringeDag::nodes_by_rank() const {
  std::map<int, std::vector<int>> layers;
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    layers[rank_[id]].push_back(static_cast<int>(id));
  }
  return layers;
}

FringeDag enumerate_fringe(const CoreGraph& root, const FringeOptions& options) {
  FringeDag dag;
  dag.nodes_.push_back(root);
  dag.distance_.push_back(0);
  dag.rank_.push_back(root.rank());
  dag.index_.emplace(root.canonical_text(), 0);

  std::set<std::pair<int, int>> edge_set;

  for (std::size_t head = 0; head < dag.nodes_.size(); ++head) {
    const CoreGraph g = dag.nodes_[head];  // copy: nodes_ grows below
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        CoreGraph q = merge_and_fold(g, u, v);
        int qid;
        auto it = dag.index_.find(q.canonical_text());
        if (it != dag.index_.end()) {
          qid = it->second;
        } else {
          if (dag.nodes_.size() >= options.max_nodes) {
            throw FringeCapError("fringe node cap (" + std::to_string(options.max_nodes) +
                                     ") exceeded; nodes enumerated so far: " +
                                     std::to_string(dag.nodes_.size()),
                                 dag.nodes_.size());
          }
          qid = static_cast<int>(dag.nodes_.size());
          dag.index_.emplace(q.canonical_text(), qid);
          dag.nodes_.push_back(std::move(q));
          dag.distance_.push_back(dag.distance_[head] + 1);
          dag.rank_.push_back(dag.nodes_.back().rank());
        }
        edge_set.emplace(static_cast<int>(head), qid);
      }
    }
  }

  dag.edges_.assign(edge_set.begin(), edge_set.end());
  dag.preds_.resize(dag.nodes_.size());
  dag.succs_.resize(dag.nodes_.size());
  for (auto [from, to] : dag.edges_) {
    dag.succs_[static_cast<std::size_t>(from)].push_back(to);
    dag.preds_[static_cast<std::size_t>(to)].push_back(from);
  }
  return dag;
}

}  // namespace stallings
