#include "stallings/algebraic.hpp"

#include <limits>

#include "stallings/errors.hpp"

namespace stallings {

PrimitivityReport primitivity_report(const FringeDag& fringe) {
  PrimitivityReport report;

  const CoreGraph& root = fringe.root();
  if (root.vertex_count() == 1 && root.edge_count() == 0) {
    // The trivial subgroup. Only the identity word has primitivity rank 0;
    // the subgroup reading is a convention and flagged as such.
    report.pi = 0;
    report.degenerate = true;
    report.critical_subgroups.push_back(root);
    report.algebraic_extensions.push_back(root);
    return report;
  }

  std::vector<int> algebraic_ids;
  for (int id = 0; id < static_cast<int>(fringe.size()); ++id) {
    bool smaller_rank_pred = false;
    for (int p : fringe.predecessors(id)) {
      if (fringe.rank_of(p) < fringe.rank_of(id)) {
        smaller_rank_pred = true;
        break;
      }
    }
    if (!smaller_rank_pred) algebraic_ids.push_back(id);
  }

  int min_rank = std::numeric_limits<int>::max();
  for (int id : algebraic_ids) {
    if (id == 0) continue;
    min_rank = std::min(min_rank, fringe.rank_of(id));
  }

  for (int id : algebraic_ids) {
    report.algebraic_extensions.push_back(fringe.node(id));
    if (id != 0 && fringe.rank_of(id) == min_rank) {
      report.critical_subgroups.push_back(fringe.node(id));
    }
  }
  if (min_rank != std::numeric_limits<int>::max()) report.pi = min_rank;
  return report;
}

PrimitivityReport primitivity_report(const GeneratingSet& h, const FringeOptions& options) {
  return primitivity_report(enumerate_fringe(build_core_graph(h), options));
}

int critical_count_for_power(const Word& u, int d, const FringeOptions& options) {
  if (d < 2) throw PreconditionError("critical_count_for_power: exponent must be >= 2");
  GeneratingSet h{u.ambient_rank(), {u.power(d)}};
  return static_cast<int>(primitivity_report(h, options).critical_subgroups.size());
}

}  // namespace stallings
