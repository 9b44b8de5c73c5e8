#include "stallings/factor.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "stallings/errors.hpp"

namespace stallings {

namespace {

struct SearchNode {
  CoreGraph graph;
  std::vector<int> eta;  // morphism onto the target quotient
  int depth;
};

}  // namespace

int rho_to_quotient(const CoreGraph& root, const CoreGraph& quotient,
                    const FringeOptions& options) {
  auto m = find_morphism(root, quotient);
  if (!m) throw NotContainedError("rho_to_quotient: no morphism onto the target");
  if (!(image_subgraph(*m) == quotient)) {
    throw NotContainedError("rho_to_quotient: target is not a quotient of the root");
  }
  if (root == quotient) return 0;

  // BFS over the interval [root, quotient]. Each interval member admits a
  // unique morphism onto the quotient, so deduplication by canonical key
  // also deduplicates the carried morphisms.
  std::unordered_map<std::string, bool> seen;
  std::deque<SearchNode> frontier;
  seen.emplace(root.canonical_text(), true);
  frontier.push_back(SearchNode{root, m->vertex_map, 0});

  while (!frontier.empty()) {
    SearchNode node = std::move(frontier.front());
    frontier.pop_front();
    const int n = node.graph.vertex_count();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (node.eta[static_cast<std::size_t>(u)] != node.eta[static_cast<std::size_t>(v)]) {
          continue;  // merging across fibers leaves the interval
        }
        std::vector<int> proj;
        CoreGraph q = merge_and_fold(node.graph, u, v, &proj);
        if (seen.contains(q.canonical_text())) continue;
        if (q == quotient) return node.depth + 1;
        if (seen.size() >= options.max_nodes) {
          throw FringeCapError("rho_to_quotient: node cap (" +
                                   std::to_string(options.max_nodes) + ") exceeded",
                               seen.size());
        }
        std::vector<int> eta_q(static_cast<std::size_t>(q.vertex_count()), -1);
        for (int x = 0; x < n; ++x) {
          eta_q[static_cast<std::size_t>(proj[static_cast<std::size_t>(x)])] =
              node.eta[static_cast<std::size_t>(x)];
        }
        seen.emplace(q.canonical_text(), true);
        frontier.push_back(SearchNode{std::move(q), std::move(eta_q), node.depth + 1});
      }
    }
  }
  throw std::logic_error("rho_to_quotient: quotient not reached");
}

FactorReport is_free_factor(const CoreGraph& h, const CoreGraph& j,
                            const FringeOptions& options) {
  FactorReport report;
  auto m = find_morphism(h, j);
  if (!m) return report;

  report.contained = true;
  CoreGraph intermediate = image_subgraph(*m);
  report.rank_gap = intermediate.rank() - h.rank();
  report.rho = rho_to_quotient(h, intermediate, options);
  report.is_free_factor = (*report.rho == *report.rank_gap);
  report.complementary_generators = *report.rho + j.rank() - intermediate.rank();
  report.intermediate = std::move(intermediate);
  return report;
}

FactorReport is_free_factor(const GeneratingSet& h, const GeneratingSet& j,
                            const FringeOptions& options) {
  if (h.ambient_rank != j.ambient_rank) {
    throw PreconditionError("is_free_factor: ambient ranks differ");
  }
  return is_free_factor(build_core_graph(h), build_core_graph(j), options);
}

bool is_primitive(const Word& w, const FringeOptions& options) {
  if (w.is_identity()) throw PreconditionError("is_primitive: word must be nonempty");
  GeneratingSet h{w.ambient_rank(), {w}};
  return is_free_factor(build_core_graph(h), CoreGraph::wedge(w.ambient_rank()), options)
      .is_free_factor;
}

int complementary_generator_count(const GeneratingSet& h, const GeneratingSet& j,
                                  const FringeOptions& options) {
  FactorReport report = is_free_factor(h, j, options);
  if (!report.contained) {
    throw NotContainedError("complementary_generator_count: subgroup is not contained");
  }
  return *report.complementary_generators;
}

}  // namespace stallings
