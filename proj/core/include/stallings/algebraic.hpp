#ifndef STALLINGS_ALGEBRAIC_HPP
#define STALLINGS_ALGEBRAIC_HPP

#include <optional>
#include <vector>

#include "stallings/fringe.hpp"

namespace stallings {

/// Primitivity rank pi(H), the H-critical subgroups (the rank-pi
/// witnesses that H is not a free factor there), and all algebraic
/// extensions of H, read off the fringe: a fringe node is an algebraic
/// extension iff it has no immediate-quotient predecessor of strictly
/// smaller rank.
struct PrimitivityReport {
  std::optional<int> pi;  // empty means infinity: H is a free factor of F_k
  bool degenerate = false;  // trivial-subgroup convention, pi reported as 0
  std::vector<CoreGraph> critical_subgroups;
  std::vector<CoreGraph> algebraic_extensions;

  bool pi_is_infinity() const { return !pi.has_value(); }
};

PrimitivityReport primitivity_report(const FringeDag& fringe);
PrimitivityReport primitivity_report(const GeneratingSet& h, const FringeOptions& options = {});

/// Number of critical subgroups of <u^d> for d >= 2. When u is not a
/// proper power this equals (number of divisors of d) - 1, realized by
/// <u^m> for the proper divisors m of d.
int critical_count_for_power(const Word& u, int d, const FringeOptions& options = {});

}  // namespace stallings

#endif
