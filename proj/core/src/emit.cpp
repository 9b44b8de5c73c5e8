#include "stallings/emit.hpp"

#include <sstream>

namespace stallings {

namespace {

std::string graph_label(const CoreGraph& g) {
  std::ostringstream os;
  os << "v=" << g.vertex_count() << " e=" << g.edge_count();
  return os.str();
}

nlohmann::json subgroup_json(const CoreGraph& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Word& w : g.subgroup_basis()) gens.push_back(w.render());
  return nlohmann::json{{"graph", g.canonical_text()},
                        {"rank", g.rank()},
                        {"generators", gens}};
}

nlohmann::json phi_value_json(const PhiValue& phi) {
  switch (phi.kind) {
    case PhiValue::Kind::Finite:
      return phi.value;
    case PhiValue::Kind::Infinity:
      return "infinity";
    case PhiValue::Kind::AtLeast:
    default:
      return ">=" + std::to_string(phi.value);
  }
}

}  // namespace

std::string to_dot(const CoreGraph& g) {
  std::ostringstream os;
  os << "digraph core {\n  rankdir=LR;\n";
  os << "  0 [shape=doublecircle, label=\"*\"];\n";
  for (int v = 1; v < g.vertex_count(); ++v) {
    os << "  " << v << " [shape=circle];\n";
  }
  for (const CoreGraph::Edge& e : g.edges()) {
    os << "  " << e.from << " -> " << e.to << " [label=\"x" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const FringeDag& dag) {
  std::ostringstream os;
  os << "digraph fringe {\n  rankdir=TB;\n";
  for (int id = 0; id < static_cast<int>(dag.size()); ++id) {
    os << "  " << id << " [shape=box, label=\"#" << id << " rank=" << dag.rank_of(id)
       << " dist=" << dag.distance_of(id) << "\\n" << graph_label(dag.node(id)) << "\"];\n";
  }
  for (auto [from, to] : dag.edges()) {
    os << "  " << from << " -> " << to << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const UpsilonGraph& u) {
  std::ostringstream os;
  os << "digraph upsilon {\n";
  for (std::size_t id = 0; id < u.pairs.size(); ++id) {
    os << "  " << id << " [shape=circle, label=\"{v" << u.pairs[id].first << ",v"
       << u.pairs[id].second << "}\"];\n";
  }
  for (const UpsilonGraph::Edge& e : u.edges) {
    os << "  " << e.from << " -> " << e.to << " [label=\"x" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const CoreGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const CoreGraph::Edge& e : g.edges()) {
    edges.push_back({{"label", e.label}, {"from", e.from}, {"to", e.to}});
  }
  return nlohmann::json{{"ambient_rank", g.ambient_rank()},
                        {"vertices", g.vertex_count()},
                        {"rank", g.rank()},
                        {"edges", edges},
                        {"canonical", g.canonical_text()}};
}

nlohmann::json to_json(const FringeDag& dag) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int id = 0; id < static_cast<int>(dag.size()); ++id) {
    nodes.push_back({{"canonical", dag.node(id).canonical_text()},
                     {"rank", dag.rank_of(id)},
                     {"distance", dag.distance_of(id)}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (auto [from, to] : dag.edges()) edges.push_back({from, to});
  return nlohmann::json{{"nodes", nodes}, {"edges", edges}};
}

nlohmann::json to_json(const FactorReport& report) {
  nlohmann::json j{{"contained", report.contained},
                   {"is_free_factor", report.is_free_factor},
                   {"rho", nullptr},
                   {"rank_gap", nullptr},
                   {"complementary_generators_needed", nullptr},
                   {"intermediate", nullptr}};
  if (report.rho) j["rho"] = *report.rho;
  if (report.rank_gap) j["rank_gap"] = *report.rank_gap;
  if (report.complementary_generators) {
    j["complementary_generators_needed"] = *report.complementary_generators;
  }
  if (report.intermediate) j["intermediate"] = report.intermediate->canonical_text();
  return j;
}

nlohmann::json to_json(const PrimitivityReport& report) {
  nlohmann::json critical = nlohmann::json::array();
  for (const CoreGraph& g : report.critical_subgroups) critical.push_back(subgroup_json(g));
  nlohmann::json algebraic = nlohmann::json::array();
  for (const CoreGraph& g : report.algebraic_extensions) algebraic.push_back(subgroup_json(g));
  nlohmann::json j{{"pi", nullptr},
                   {"degenerate", report.degenerate},
                   {"critical_subgroups", critical},
                   {"algebraic_extensions", algebraic}};
  j["pi"] = report.pi ? nlohmann::json(*report.pi) : nlohmann::json("infinity");
  return j;
}

nlohmann::json to_json(const PhiReport& report) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Integer& c : report.series.coefficients) coeffs.push_back(c.get_str());
  return nlohmann::json{{"coefficients", coeffs},
                        {"order", report.series.order()},
                        {"phi", phi_value_json(report.phi)},
                        {"valid_from", report.valid_from}};
}

nlohmann::json to_json(const EstimateReport& report) {
  nlohmann::json j{{"trials", report.trials},
                   {"seed", report.seed},
                   {"standard_error", report.standard_error},
                   {"rng", report.rng_name},
                   {"exact", nullptr}};
  if (report.kind == EstimateReport::Kind::Probability) {
    j["kind"] = "probability";
    j["probability_estimate"] = report.estimate;
  } else {
    j["kind"] = "fixed_point_average";
    j["mean_fixed_points"] = report.estimate;
  }
  if (report.exact) j["exact"] = report.exact->get_str();
  return j;
}

}  // namespace stallings
