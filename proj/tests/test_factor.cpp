#include <doctest.h>

#include "stallings/factor.hpp"
#include "support/oracles.hpp"
#include "support/random_inputs.hpp"

using namespace stallings;

namespace {

CoreGraph G(const std::string& gens, int k) {
  return build_core_graph(GeneratingSet::parse(gens, k));
}

GeneratingSet S(const std::string& gens, int k) { return GeneratingSet::parse(gens, k); }

}  // namespace

TEST_CASE("worked pair: a free factor at distance one") {
  FactorReport report = is_free_factor(S("x1 x2 X1 X2, x2 x1 x1", 2),
                                       S("x1^3, x2^3, x1 X2, x1 x2 x1", 2));
  CHECK(report.contained);
  CHECK(report.is_free_factor);
  CHECK(report.rho == 1);
  CHECK(report.rank_gap == 1);
  REQUIRE(report.intermediate.has_value());
  CHECK(report.intermediate->rank() == 3);
  // The supergroup has rank 4 (three vertices, six edges), so one more
  // complementary generator is needed beyond the intermediate image:
  // t = rho + rk(J) - rk(J') = 1 + 4 - 3.
  CHECK(report.complementary_generators == 2);
}

TEST_CASE("commutator is not a free factor of F_2 inside F_3") {
  FactorReport report = is_free_factor(G("x1 x2 X1 X2", 3), CoreGraph::wedge(3));
  CHECK(report.contained);
  CHECK_FALSE(report.is_free_factor);
  CHECK(report.rho == 2);
  CHECK(report.rank_gap == 1);
  // rho + rk(F_3) - rk(F_2) = 2 + 3 - 2.
  CHECK(report.complementary_generators == 3);
}

TEST_CASE("reflexivity") {
  FactorReport report = is_free_factor(S("x1 x2 X1 X2, x2 x1 x1", 2),
                                       S("x2 x1 x1, x1 x2 X1 X2", 2));
  CHECK(report.contained);
  CHECK(report.is_free_factor);
  CHECK(report.rho == 0);
  CHECK(report.rank_gap == 0);
  CHECK(report.complementary_generators == 0);
}

TEST_CASE("not contained") {
  FactorReport report = is_free_factor(S("x2", 2), S("x1", 2));
  CHECK_FALSE(report.contained);
  CHECK_FALSE(report.is_free_factor);
  CHECK_FALSE(report.rho.has_value());
  CHECK_THROWS_AS(complementary_generator_count(S("x2", 2), S("x1", 2)), NotContainedError);
}

TEST_CASE("complementary generators") {
  CHECK(complementary_generator_count(S("a, b", 2), S("a, b", 2)) == 0);
  CHECK(complementary_generator_count(S("x1 x2 X1 X2", 3), S("x1, x2, x3", 3)) == 3);
  CHECK(complementary_generator_count(S("x1", 2), S("x1, x2", 2)) == 1);
}

TEST_CASE("trivial subgroup is a free factor of everything") {
  FactorReport report = is_free_factor(S("", 2), S("a b A B, b a a", 2));
  CHECK(report.contained);
  CHECK(report.is_free_factor);
  CHECK(report.rho == 0);
  CHECK(report.rank_gap == 0);
  CHECK(report.complementary_generators == 2);
  CHECK(complementary_generator_count(S("", 3), S("a, b, c", 3)) == 3);
}

TEST_CASE("primitivity of words") {
  CHECK(is_primitive(Word::parse("x1 x2", 2)));
  CHECK_FALSE(is_primitive(Word::parse("x1 x2 X1 X2", 2)));
  CHECK_FALSE(is_primitive(Word::parse("x1 x2 X1 X2", 3)));
  CHECK(is_primitive(Word::parse("x1", 4)));
  CHECK(is_primitive(Word::parse("x1 x2 x2", 2)));
  CHECK_FALSE(is_primitive(Word::parse("x1^2", 2)));
  CHECK_THROWS_AS(is_primitive(Word::identity(2)), PreconditionError);
}

TEST_CASE("rho_to_quotient agrees with the full fringe") {
  test::Rng rng(0x5eedfa01);
  for (int rep = 0; rep < 25; ++rep) {
    CoreGraph root = build_core_graph(test::random_generating_set(rng, 2, 2, 6));
    FringeDag dag = enumerate_fringe(root);
    int pick = static_cast<int>(rng.below(dag.size()));
    CHECK(rho_to_quotient(root, dag.node(pick)) == dag.distance_of(pick));
  }
}

TEST_CASE("rho_to_quotient rejects non-quotients") {
  // No morphism at all.
  CHECK_THROWS_AS(rho_to_quotient(G("x1 x2 X1 X2", 2), G("x1, x2 x2", 2)), NotContainedError);
  CHECK_THROWS_AS(rho_to_quotient(G("x1", 2), G("x2", 2)), NotContainedError);
  // Morphism exists but is not onto: containment without covering.
  CHECK_THROWS_AS(rho_to_quotient(G("x1", 2), CoreGraph::wedge(2)), NotContainedError);
}

TEST_CASE("property: theorem cross-check against extension search") {
  test::Rng rng(0x5eedfa02);
  int checked = 0;
  for (int rep = 0; rep < 12; ++rep) {
    CoreGraph h = build_core_graph(test::random_generating_set(rng, 2, 2, 5));
    if (h.vertex_count() > 6) continue;
    FringeDag dag = enumerate_fringe(h);
    for (int id = 0; id < static_cast<int>(dag.size()); ++id) {
      int gap = dag.rank_of(id) - h.rank();
      if (gap < 0 || gap > 2) continue;
      bool fast = is_free_factor(h, dag.node(id)).is_free_factor;
      bool slow = test::free_factor_by_extension_search(h, dag.node(id));
      CHECK(fast == slow);
      ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("property: transitivity across the fringe") {
  test::Rng rng(0x5eedfa03);
  int verified = 0;
  for (int rep = 0; rep < 20; ++rep) {
    CoreGraph h = build_core_graph(test::random_generating_set(rng, 2, 2, 5));
    FringeDag dag = enumerate_fringe(h);
    if (dag.size() < 2) continue;
    int jid = static_cast<int>(rng.below(dag.size()));
    const CoreGraph& j = dag.node(jid);
    if (!is_free_factor(h, j).is_free_factor) continue;
    FringeDag jdag = enumerate_fringe(j);
    int kid = static_cast<int>(rng.below(jdag.size()));
    const CoreGraph& target = jdag.node(kid);
    if (!is_free_factor(j, target).is_free_factor) continue;
    CHECK(is_free_factor(h, target).is_free_factor);
    ++verified;
  }
  CHECK(verified > 0);
}

TEST_CASE("property: graph embeddings give free factors") {
  test::Rng rng(0x5eedfa04);
  for (int rep = 0; rep < 20; ++rep) {
    GeneratingSet gens = test::random_generating_set(rng, 2, 2, 6);
    gens.ambient_rank = 3;  // embed F_2 subgroups into F_3
    std::vector<Word> lifted;
    for (const Word& w : gens.generators) lifted.push_back(Word::from_letters(3, w.letters()));
    GeneratingSet sub{3, lifted};
    GeneratingSet sup = sub;
    sup.generators.push_back(Word::parse("x3", 3));

    CoreGraph hg = build_core_graph(sub);
    CoreGraph jg = build_core_graph(sup);
    auto m = find_morphism(hg, jg);
    REQUIRE(m.has_value());
    std::set<int> image(m->vertex_map.begin(), m->vertex_map.end());
    REQUIRE(image.size() == m->vertex_map.size());  // the morphism embeds
    CHECK(is_free_factor(hg, jg).is_free_factor);
  }
}

TEST_CASE("property: free factors sandwich") {
  test::Rng rng(0x5eedfa05);
  int verified = 0;
  for (int rep = 0; rep < 15; ++rep) {
    CoreGraph h = build_core_graph(test::random_generating_set(rng, 2, 2, 5));
    FringeDag dag = enumerate_fringe(h);
    for (int jid = 0; jid < static_cast<int>(dag.size()); ++jid) {
      if (!is_free_factor(h, dag.node(jid)).is_free_factor) continue;
      for (int mid = 0; mid < static_cast<int>(dag.size()); ++mid) {
        if (mid == jid) continue;
        if (!find_morphism(dag.node(mid), dag.node(jid)).has_value()) continue;
        CHECK(is_free_factor(h, dag.node(mid)).is_free_factor);
        ++verified;
      }
    }
  }
  CHECK(verified > 0);
}
