#ifndef STALLINGS_SERIES_HPP
#define STALLINGS_SERIES_HPP

#include <gmpxx.h>

#include <vector>

#include "stallings/fringe.hpp"

namespace stallings {

using Integer = mpz_class;
using Rational = mpq_class;

/// Truncated power series in u = 1/n with exact integer coefficients.
/// Internally the expansion runs over exact rationals; integrality of the
/// result is a theorem, so a surviving denominator is reported as an
/// internal error rather than rounded away.
struct TruncatedSeries {
  std::vector<Integer> coefficients;  // indices 0..order

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  const Integer& at(int i) const { return coefficients[static_cast<std::size_t>(i)]; }

  /// Index of the first nonzero coefficient, or -1 if all vanish.
  int first_nonzero() const;
};

/// phi(H): index of the first nonzero series coefficient. A truncated
/// series cannot certify vanishing, so an all-zero window is reported as
/// a lower bound unless the free-factor certificate upgrades it to
/// infinity.
struct PhiValue {
  enum class Kind { Finite, AtLeast, Infinity };
  Kind kind;
  int value = 0;  // the finite index, or the lower bound for AtLeast
};

struct PhiReport {
  TruncatedSeries series;
  PhiValue phi;
  long valid_from;  // smallest n for which the closed form is exact
};

/// Series of P_Gamma(n) in u = 1/n, truncated at `order`:
///   u^rank * prod_{i=1}^{v-1} (1 - i u) / prod_j prod_{i=1}^{e^j-1} (1 - i u).
/// Coefficients below index rank(g) vanish.
TruncatedSeries p_gamma_series(const CoreGraph& g, int order);

/// Smallest n at which the closed form below is exact: max_j e^j over the
/// root (quotients only shrink per-label edge counts).
long series_valid_from(const CoreGraph& root);

/// Exact value of Phi_H(n): -1/n^rk(H) plus, over every fringe node, a
/// quotient of falling factorials
///   (n-1)...(n-v+1) / prod_j [ n(n-1)...(n-e^j+1) ].
Rational phi_closed_form(const FringeDag& fringe, long n);
Rational phi_closed_form(const GeneratingSet& h, long n, const FringeOptions& options = {});

/// Sum of p_gamma_series over the fringe minus the single -1 at index
/// rk(H); phi per PhiValue.
PhiReport phi_series(const FringeDag& fringe, int order, const FringeOptions& options = {});
PhiReport phi_series(const GeneratingSet& h, int order, const FringeOptions& options = {});

/// Contribution to a_i from all fringe nodes of rank <= i-1 together with
/// the -1/n^rk term. Complements the count of rank-i nodes:
/// a_i = lower_rank_contribution(i) + #nodes of rank exactly i.
Integer lower_rank_contribution(const FringeDag& fringe, int i);
Integer lower_rank_contribution(const GeneratingSet& h, int i, const FringeOptions& options = {});

/// n * Phi_<w>(n) + 1, the expected number of fixed points of the image
/// of w under a uniform random homomorphism to S_n.
Rational average_fixed_points(const Word& w, long n, const FringeOptions& options = {});
Rational average_fixed_points(const FringeDag& fringe, long n);

}  // namespace stallings

#endif
