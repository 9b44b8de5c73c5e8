#include <doctest.h>

#include "stallings/algebraic.hpp"
#include "stallings/series.hpp"
#include "support/random_inputs.hpp"

using namespace stallings;

namespace {

CoreGraph G(const std::string& gens, int k) {
  return build_core_graph(GeneratingSet::parse(gens, k));
}

GeneratingSet S(const std::string& gens, int k) { return GeneratingSet::parse(gens, k); }

std::vector<long> coeffs(const TruncatedSeries& s) {
  std::vector<long> out;
  for (const Integer& c : s.coefficients) out.push_back(c.get_si());
  return out;
}

// Exact value of the falling-factorial quotient for one graph at n.
Rational p_gamma_at(const CoreGraph& g, long n) {
  Integer num(1);
  for (int i = 1; i < g.vertex_count(); ++i) num *= Integer(n - i);
  Integer den(1);
  for (int j = 1; j <= g.ambient_rank(); ++j) {
    for (int i = 0; i < g.edge_count(j); ++i) den *= Integer(n - i);
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("p_gamma_series: wedge of two loops is exactly u^2") {
  CHECK(coeffs(p_gamma_series(CoreGraph::wedge(2), 6)) ==
        std::vector<long>{0, 0, 1, 0, 0, 0, 0});
}

TEST_CASE("p_gamma_series: single vertex is the constant 1") {
  CHECK(coeffs(p_gamma_series(CoreGraph::trivial(2), 4)) == std::vector<long>{1, 0, 0, 0, 0});
}

TEST_CASE("p_gamma_series: commutator root expansion") {
  CoreGraph root = G("x1 x2 X1 X2", 2);
  TruncatedSeries s = p_gamma_series(root, 5);
  // u (1-u)(1-2u)(1-3u) / (1-u)^2 = u (1-2u)(1-3u) / (1-u)
  //                              = u - 4u^2 + 2u^3 + 2u^4 + ...
  CHECK(coeffs(s) == std::vector<long>{0, 1, -4, 2, 2, 2});

  // Two exact routes to the same rational value.
  for (long n : {7L, 11L}) {
    Rational u(1, n);
    Rational factored = u * (1 - 2 * u) * (1 - 3 * u) / (1 - u);
    CHECK(p_gamma_at(root, n) == factored);
  }
}

TEST_CASE("phi_closed_form: commutator gives 1/(n(n-1))") {
  FringeDag dag = enumerate_fringe(G("x1 x2 X1 X2", 2));
  CHECK(series_valid_from(dag.root()) == 2);
  for (long n = 2; n <= 50; ++n) {
    Rational expected(1, n * (n - 1));
    expected.canonicalize();
    CHECK(phi_closed_form(dag, n) == expected);
  }
  CHECK_THROWS_AS(phi_closed_form(dag, 1), PreconditionError);
}

TEST_CASE("phi_closed_form: basis element vanishes") {
  for (long n = 1; n <= 10; ++n) {
    CHECK(phi_closed_form(S("x1", 2), n) == 0);
  }
}

TEST_CASE("phi_closed_form: x1^2 at n=3") {
  CHECK(phi_closed_form(S("x1^2", 1), 3) == Rational(1, 3));
}

TEST_CASE("phi_series: commutator coefficients and phi") {
  PhiReport report = phi_series(S("x1 x2 X1 X2", 2), 6);
  CHECK(coeffs(report.series) == std::vector<long>{0, 0, 1, 1, 1, 1, 1});
  CHECK(report.phi.kind == PhiValue::Kind::Finite);
  CHECK(report.phi.value == 2);
  CHECK(report.valid_from == 2);
}

TEST_CASE("phi_series: free factor upgraded to infinity") {
  PhiReport report = phi_series(S("x1", 2), 6);
  for (const Integer& c : report.series.coefficients) CHECK(c == 0);
  CHECK(report.phi.kind == PhiValue::Kind::Infinity);
}

TEST_CASE("phi_series: squares word in F_3") {
  PhiReport report = phi_series(S("x1^2 x2^2 x3^2", 3), 3);
  CHECK(coeffs(report.series) == std::vector<long>{0, 0, 0, 1});
  CHECK(report.phi.kind == PhiValue::Kind::Finite);
  CHECK(report.phi.value == 3);
}

TEST_CASE("lower_rank_contribution") {
  CHECK(lower_rank_contribution(S("x1 x2 X1 X2", 2), 2) == -4);
  // The 13 nodes of rank <= 2 in the squares-word census sum to -29 at
  // index 3, offsetting the 30 rank-3 nodes down to a_3 = 1.
  CHECK(lower_rank_contribution(S("x1^2 x2^2 x3^2", 3), 3) == -29);
  // Fringe of the wedge is a single node; nothing of smaller rank exists.
  CHECK(lower_rank_contribution(enumerate_fringe(CoreGraph::wedge(2)), 3) == 0);
  // At i = rk only the -1/n^rk term contributes.
  CHECK(lower_rank_contribution(enumerate_fringe(CoreGraph::wedge(2)), 2) == -1);
}

TEST_CASE("phi of the trivial subgroup vanishes identically") {
  GeneratingSet trivial{2, {}};
  for (long n = 1; n <= 6; ++n) CHECK(phi_closed_form(trivial, n) == 0);
  PhiReport report = phi_series(trivial, 4);
  for (const Integer& c : report.series.coefficients) CHECK(c == 0);
  CHECK(report.phi.kind == PhiValue::Kind::Infinity);
}

TEST_CASE("average_fixed_points") {
  CHECK(average_fixed_points(Word::parse("x1 x2 X1 X2", 2), 20) == Rational(1) + Rational(1, 19));
  for (long n : {2L, 5L, 9L}) {
    CHECK(average_fixed_points(Word::parse("x1 x2", 2), n) == 1);
  }
}

TEST_CASE("property: integrality and truncation stability") {
  test::Rng rng(0x5eed5e01);
  for (int rep = 0; rep < 15; ++rep) {
    GeneratingSet gens = test::random_generating_set(rng, 2, 2, 6);
    FringeDag dag = enumerate_fringe(build_core_graph(gens));
    PhiReport lo = phi_series(dag, 3);
    PhiReport hi = phi_series(dag, 6);
    for (int i = 0; i <= 3; ++i) {
      CHECK(lo.series.at(i) == hi.series.at(i));
    }
  }
}

TEST_CASE("property: coefficients below the rank vanish") {
  test::Rng rng(0x5eed5e02);
  for (int rep = 0; rep < 25; ++rep) {
    CoreGraph g = build_core_graph(test::random_generating_set(rng, 2, 2, 6));
    TruncatedSeries s = p_gamma_series(g, g.rank() + 2);
    for (int i = 0; i < g.rank(); ++i) CHECK(s.at(i) == 0);
    CHECK(s.at(g.rank()) == 1);  // leading coefficient
  }
}

TEST_CASE("property: a_i splits into low contribution plus rank-i node count") {
  test::Rng rng(0x5eed5e03);
  for (int rep = 0; rep < 12; ++rep) {
    FringeDag dag = enumerate_fringe(build_core_graph(test::random_generating_set(rng, 2, 2, 5)));
    PhiReport report = phi_series(dag, 4);
    auto layers = dag.nodes_by_rank();
    for (int i = 0; i <= 4; ++i) {
      Integer expected = lower_rank_contribution(dag, i);
      if (auto it = layers.find(i); it != layers.end()) {
        expected += static_cast<long>(it->second.size());
      }
      CHECK(report.series.at(i) == expected);
    }
  }
}

TEST_CASE("series evaluation matches the closed form on polynomial cases") {
  // With at most one edge per label the denominator products are empty,
  // so P_Gamma is a polynomial in u and a sufficiently long series must
  // evaluate to exactly the falling-factorial quotient.
  for (const CoreGraph& g :
       {CoreGraph::wedge(2), G("x1 x2", 2), CoreGraph::trivial(2), G("x1 x2 x3", 3)}) {
    TruncatedSeries s = p_gamma_series(g, g.vertex_count() + g.rank() + 1);
    for (long n = 5; n <= 9; ++n) {
      Rational u(1, n);
      Rational poly(0);
      Rational upow(1);
      for (const Integer& c : s.coefficients) {
        poly += Rational(c) * upow;
        upow *= u;
      }
      CHECK(poly == p_gamma_at(g, n));
    }
  }
}

TEST_CASE("property: first coefficient is positive when phi <= 2") {
  test::Rng rng(0x5eed5e04);
  int hits = 0;
  for (int rep = 0; rep < 40; ++rep) {
    // Kept short: quotient counts grow superexponentially in word length.
    Word w = rep % 4 == 0 ? test::random_reduced_word(rng, 2, 1 + rng.below(3)).power(2)
                          : test::random_reduced_word(rng, 2, 1 + rng.below(6));
    if (w.is_identity()) continue;
    PhiReport report = phi_series(S(w.render(), 2), 3);
    if (report.phi.kind == PhiValue::Kind::Finite && report.phi.value <= 2) {
      CHECK(report.series.at(report.phi.value) > 0);
      ++hits;
    }
  }
  CHECK(hits > 5);
}

TEST_CASE("property: subleading coefficient is minus the pair deficit") {
  // [u^{rank+1}] P_Gamma = -(C(v,2) - sum_j C(e^j,2)), which is also the
  // number of pair-graph components when that graph is a forest.
  test::Rng rng(0x5eed5e07);
  for (int rep = 0; rep < 30; ++rep) {
    CoreGraph g = build_core_graph(test::random_generating_set(rng, 2, 2, 6));
    long v = g.vertex_count();
    long deficit = v * (v - 1) / 2;
    for (int j = 1; j <= g.ambient_rank(); ++j) {
      long e = g.edge_count(j);
      deficit -= e * (e - 1) / 2;
    }
    TruncatedSeries s = p_gamma_series(g, g.rank() + 1);
    CHECK(s.at(g.rank() + 1) == -deficit);
  }
}

TEST_CASE("property: quotients never exceed the root's per-label edge counts") {
  // This is what makes the root's threshold valid for the whole sum.
  test::Rng rng(0x5eed5e06);
  for (int rep = 0; rep < 20; ++rep) {
    CoreGraph root = build_core_graph(test::random_generating_set(rng, 2, 2, 6));
    FringeDag dag = enumerate_fringe(root);
    for (int id = 0; id < static_cast<int>(dag.size()); ++id) {
      for (int j = 1; j <= 2; ++j) {
        CHECK(dag.node(id).edge_count(j) <= root.edge_count(j));
      }
    }
  }
}

TEST_CASE("property: pi and phi coincide up to rank + 1") {
  test::Rng rng(0x5eed5e05);
  int checked = 0;
  for (int rep = 0; rep < 30; ++rep) {
    GeneratingSet gens = test::random_generating_set(rng, 2, 2, 6);
    CoreGraph root = build_core_graph(gens);
    if (root.rank() < 1) continue;  // rk >= k - 1 = 1
    FringeDag dag = enumerate_fringe(root);
    PrimitivityReport pi_report = primitivity_report(dag);
    const int order = root.rank() + 3;
    PhiReport phi_report = phi_series(dag, order);

    if (pi_report.pi && *pi_report.pi <= root.rank() + 1) {
      REQUIRE(phi_report.phi.kind == PhiValue::Kind::Finite);
      CHECK(phi_report.phi.value == *pi_report.pi);
      CHECK(phi_report.series.at(*pi_report.pi) ==
            static_cast<long>(pi_report.critical_subgroups.size()));
    } else {
      // pi exceeds rk + 1 (possibly infinite): phi must as well.
      if (phi_report.phi.kind == PhiValue::Kind::Finite) {
        CHECK(phi_report.phi.value > root.rank() + 1);
      }
    }
    ++checked;
  }
  CHECK(checked > 10);
}
