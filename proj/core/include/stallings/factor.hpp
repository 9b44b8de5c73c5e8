#ifndef STALLINGS_FACTOR_HPP
#define STALLINGS_FACTOR_HPP

#include <optional>

#include "stallings/core_graph.hpp"
#include "stallings/fringe.hpp"

namespace stallings {

/// Outcome of the free-factor decision for a pair H <= J.
///
/// `intermediate` is the image subgroup J' of the morphism from H's graph
/// into J's; H covers J', and H is a free factor of J iff it is one of J'.
/// The decision itself is the distance criterion: H is a free factor iff
/// rho equals the rank gap rk(J') - rk(H).
struct FactorReport {
  bool contained = false;
  bool is_free_factor = false;
  std::optional<CoreGraph> intermediate;
  std::optional<int> rho;
  std::optional<int> rank_gap;
  // Minimal number of complementary generators: rho + rk(J) - rk(J').
  std::optional<int> complementary_generators;
};

/// Distance rho_X(root, quotient) along immediate-quotient steps. The
/// search merges only vertex pairs lying in one fiber of the morphism
/// onto the quotient, which confines the BFS to the interval between the
/// two subgroups. Throws NotContainedError when the quotient is not
/// covered by the root.
int rho_to_quotient(const CoreGraph& root, const CoreGraph& quotient,
                    const FringeOptions& options = {});

FactorReport is_free_factor(const CoreGraph& h, const CoreGraph& j,
                            const FringeOptions& options = {});
FactorReport is_free_factor(const GeneratingSet& h, const GeneratingSet& j,
                            const FringeOptions& options = {});

/// Primitivity of a nonempty word: <w> a free factor of the whole ambient
/// free group.
bool is_primitive(const Word& w, const FringeOptions& options = {});

/// Minimal number t of generators to add to H to generate J; requires
/// H <= J.
int complementary_generator_count(const GeneratingSet& h, const GeneratingSet& j,
                                  const FringeOptions& options = {});

}  // namespace stallings

#endif
