#include "stallings/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "stallings/errors.hpp"
#include "stallings/factor.hpp"

namespace stallings {

namespace {

using RatVec = std::vector<Rational>;

// c *= (1 - i u), truncated.
void multiply_binomial(RatVec& c, long i) {
  for (std::size_t t = c.size(); t-- > 1;) {
    c[t] -= Rational(i) * c[t - 1];
  }
}

// c /= (1 - i u), truncated: c'_t = c_t + i * c'_{t-1}.
void divide_binomial(RatVec& c, long i) {
  for (std::size_t t = 1; t < c.size(); ++t) {
    c[t] += Rational(i) * c[t - 1];
  }
}

TruncatedSeries to_integer_series(const RatVec& c) {
  TruncatedSeries s;
  s.coefficients.reserve(c.size());
  for (const Rational& q : c) {
    if (q.get_den() != 1) {
      throw std::logic_error("series expansion produced a non-integer coefficient");
    }
    s.coefficients.push_back(q.get_num());
  }
  return s;
}

}  // namespace

int TruncatedSeries::first_nonzero() const {
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

TruncatedSeries p_gamma_series(const CoreGraph& g, int order) {
  if (order < 0) throw PreconditionError("p_gamma_series: order must be >= 0");
  const int r = g.rank();
  RatVec shifted(static_cast<std::size_t>(order) + 1, Rational(0));
  if (r <= order) {
    RatVec c(static_cast<std::size_t>(order - r) + 1, Rational(0));
    c[0] = 1;
    for (int i = 1; i < g.vertex_count(); ++i) multiply_binomial(c, i);
    for (int j = 1; j <= g.ambient_rank(); ++j) {
      for (int i = 1; i < g.edge_count(j); ++i) divide_binomial(c, i);
    }
    std::copy(c.begin(), c.end(), shifted.begin() + r);
  }
  return to_integer_series(shifted);
}

long series_valid_from(const CoreGraph& root) {
  return std::max(1, root.max_label_edge_count());
}

Rational phi_closed_form(const FringeDag& fringe, long n) {
  const long threshold = series_valid_from(fringe.root());
  if (n < threshold) {
    throw PreconditionError("phi_closed_form: n below validity threshold " +
                            std::to_string(threshold));
  }

  Rational sum(0);
  for (int id = 0; id < static_cast<int>(fringe.size()); ++id) {
    const CoreGraph& g = fringe.node(id);
    Integer num(1);
    for (int i = 1; i < g.vertex_count(); ++i) num *= Integer(n - i);
    Integer den(1);
    for (int j = 1; j <= g.ambient_rank(); ++j) {
      for (int i = 0; i < g.edge_count(j); ++i) den *= Integer(n - i);
    }
    Rational term(num, den);
    term.canonicalize();
    sum += term;
  }

  Integer nr;
  mpz_ui_pow_ui(nr.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(fringe.root().rank()));
  Rational correction(1, nr);
  correction.canonicalize();
  return sum - correction;
}

Rational phi_closed_form(const GeneratingSet& h, long n, const FringeOptions& options) {
  return phi_closed_form(enumerate_fringe(build_core_graph(h), options), n);
}

PhiReport phi_series(const FringeDag& fringe, int order, const FringeOptions& options) {
  if (order < 0) throw PreconditionError("phi_series: order must be >= 0");

  TruncatedSeries total;
  total.coefficients.assign(static_cast<std::size_t>(order) + 1, Integer(0));
  for (int id = 0; id < static_cast<int>(fringe.size()); ++id) {
    TruncatedSeries part = p_gamma_series(fringe.node(id), order);
    for (std::size_t i = 0; i < total.coefficients.size(); ++i) {
      total.coefficients[i] += part.coefficients[i];
    }
  }
  const int r = fringe.root().rank();
  if (r <= order) total.coefficients[static_cast<std::size_t>(r)] -= 1;

  PhiReport report{std::move(total), PhiValue{}, series_valid_from(fringe.root())};
  int first = report.series.first_nonzero();
  if (first >= 0) {
    report.phi = PhiValue{PhiValue::Kind::Finite, first};
  } else {
    // All coefficients vanish up to the truncation order. Only the
    // free-factor certificate can upgrade this to infinity.
    const CoreGraph& root = fringe.root();
    FactorReport ff = is_free_factor(root, CoreGraph::wedge(root.ambient_rank()), options);
    report.phi = ff.is_free_factor ? PhiValue{PhiValue::Kind::Infinity, 0}
                                   : PhiValue{PhiValue::Kind::AtLeast, order + 1};
  }
  return report;
}

PhiReport phi_series(const GeneratingSet& h, int order, const FringeOptions& options) {
  return phi_series(enumerate_fringe(build_core_graph(h), options), order, options);
}

Integer lower_rank_contribution(const FringeDag& fringe, int i) {
  if (i < 0) throw PreconditionError("lower_rank_contribution: index must be >= 0");
  Integer total(0);
  for (int id = 0; id < static_cast<int>(fringe.size()); ++id) {
    if (fringe.rank_of(id) <= i - 1) {
      total += p_gamma_series(fringe.node(id), i).at(i);
    }
  }
  if (fringe.root().rank() == i) total -= 1;
  return total;
}

Integer lower_rank_contribution(const GeneratingSet& h, int i, const FringeOptions& options) {
  return lower_rank_contribution(enumerate_fringe(build_core_graph(h), options), i);
}

Rational average_fixed_points(const FringeDag& fringe, long n) {
  return Rational(n) * phi_closed_form(fringe, n) + 1;
}

Rational average_fixed_points(const Word& w, long n, const FringeOptions& options) {
  GeneratingSet h{w.ambient_rank(), {w}};
  return average_fixed_points(enumerate_fringe(build_core_graph(h), options), n);
}

}  // namespace stallings
