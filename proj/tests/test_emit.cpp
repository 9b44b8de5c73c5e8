#include <doctest.h>

#include "stallings/emit.hpp"

using namespace stallings;

namespace {

CoreGraph G(const std::string& gens, int k) {
  return build_core_graph(GeneratingSet::parse(gens, k));
}

GeneratingSet S(const std::string& gens, int k) { return GeneratingSet::parse(gens, k); }

}  // namespace

TEST_CASE("core graph DOT marks the basepoint and labels edges") {
  std::string dot = to_dot(G("x1 x2", 2));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("0 [shape=doublecircle") != std::string::npos);
  CHECK(dot.find("[label=\"x1\"]") != std::string::npos);
  CHECK(dot.find("[label=\"x2\"]") != std::string::npos);
}

TEST_CASE("fringe DOT annotates rank and distance") {
  std::string dot = to_dot(enumerate_fringe(G("x1 x2 X1 X2", 2)));
  CHECK(dot.find("rank=1 dist=0") != std::string::npos);
  CHECK(dot.find("rank=2 dist=1") != std::string::npos);
  CHECK(dot.find("rank=3 dist=2") != std::string::npos);
}

TEST_CASE("upsilon DOT uses pair labels") {
  std::string dot = to_dot(build_upsilon(G("x1 x2 X1 X2", 2)));
  CHECK(dot.find("{v0,v1}") != std::string::npos);
}

TEST_CASE("core graph JSON carries the canonical serialization") {
  nlohmann::json j = to_json(G("x1 x2", 2));
  CHECK(j["canonical"] == "k=2 v=2\n1 0 1\n2 1 0\n");
  CHECK(j["rank"] == 1);
  CHECK(j["edges"].size() == 2);
}

TEST_CASE("fringe JSON lists nodes with rank and distance") {
  nlohmann::json j = to_json(enumerate_fringe(G("x1 x2 X1 X2", 2)));
  CHECK(j["nodes"].size() == 7);
  CHECK(j["edges"].size() >= 6);
}

TEST_CASE("phi JSON renders coefficients as decimal strings") {
  nlohmann::json j = to_json(phi_series(S("x1 x2 X1 X2", 2), 6));
  CHECK(j["coefficients"] ==
        nlohmann::json::array({"0", "0", "1", "1", "1", "1", "1"}));
  CHECK(j["phi"] == 2);
  CHECK(j["valid_from"] == 2);
}

TEST_CASE("primitivity JSON spells pi = infinity for free factors") {
  nlohmann::json j = to_json(primitivity_report(S("x1", 2)));
  CHECK(j["pi"] == "infinity");
}

TEST_CASE("estimate JSON distinguishes the two kinds") {
  nlohmann::json p = to_json(exhaustive_report(S("x1", 1), 3));
  CHECK(p["kind"] == "probability");
  CHECK(p["exact"] == "1/3");

  nlohmann::json f = to_json(average_fixed_points_mc(Word::parse("x1", 1), 4, 10, 1));
  CHECK(f["kind"] == "fixed_point_average");
  CHECK(f.contains("mean_fixed_points"));
}
