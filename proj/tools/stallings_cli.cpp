// Command-line frontend for the stallings library: core graphs, fringes,
// free-factor and primitivity decisions, exact fixed-point statistics, and
// the permutation-sampling oracles.
//
// Exit codes: 0 success (for is-free-factor / is-primitive: yes);
// 1 contained-but-not-free-factor / not primitive; 2 not contained;
// 64 usage error; 65 bad input data or precondition; 69 resource cap;
// 70 internal error.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "stallings/emit.hpp"

namespace {

using namespace stallings;

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitResource = 69;
constexpr int kExitInternal = 70;

enum class Format { Text, Json, Dot };

struct FormatFlags {
  bool json = false;
  bool dot = false;

  Format pick() const {
    if (json) return Format::Json;
    if (dot) return Format::Dot;
    return Format::Text;
  }
};

void add_format_flags(CLI::App* cmd, FormatFlags& flags, bool with_dot) {
  auto* j = cmd->add_flag("--json", flags.json, "emit JSON on stdout");
  if (with_dot) {
    auto* d = cmd->add_flag("--dot", flags.dot, "emit graphviz DOT on stdout");
    j->excludes(d);
    d->excludes(j);
  }
}

std::string describe_phi(const PhiValue& phi) {
  switch (phi.kind) {
    case PhiValue::Kind::Finite:
      return std::to_string(phi.value);
    case PhiValue::Kind::Infinity:
      return "infinity";
    case PhiValue::Kind::AtLeast:
    default:
      return ">=" + std::to_string(phi.value);
  }
}

// One falling-factorial quotient of the closed form, e.g.
// (n-1)(n-2) / [n(n-1) n(n-1)].
std::string term_string(const CoreGraph& g) {
  std::ostringstream os;
  if (g.vertex_count() == 1) {
    os << "1";
  } else {
    for (int i = 1; i < g.vertex_count(); ++i) os << "(n-" << i << ")";
  }
  os << " / [";
  bool first = true;
  for (int j = 1; j <= g.ambient_rank(); ++j) {
    if (g.edge_count(j) == 0) continue;
    if (!first) os << " ";
    first = false;
    os << "n";
    for (int i = 1; i < g.edge_count(j); ++i) os << "(n-" << i << ")";
  }
  if (first) os << "1";
  os << "]";
  return os.str();
}

int run_core_graph(int k, const std::string& gens_str, Format format) {
  CoreGraph g = build_core_graph(GeneratingSet::parse(gens_str, k));
  switch (format) {
    case Format::Json:
      std::cout << to_json(g).dump(2) << "\n";
      break;
    case Format::Dot:
      std::cout << to_dot(g);
      break;
    case Format::Text:
      std::cout << g.canonical_text();
      std::cout << "rank: " << g.rank() << "\n";
      break;
  }
  return 0;
}

int run_fringe(int k, const std::string& gens_str, std::size_t max_nodes, Format format) {
  CoreGraph root = build_core_graph(GeneratingSet::parse(gens_str, k));
  FringeDag dag = enumerate_fringe(root, FringeOptions{max_nodes});
  switch (format) {
    case Format::Json:
      std::cout << to_json(dag).dump(2) << "\n";
      break;
    case Format::Dot:
      std::cout << to_dot(dag);
      break;
    case Format::Text: {
      std::cout << "nodes: " << dag.size() << "\n";
      std::map<int, int> by_distance;
      for (int id = 0; id < static_cast<int>(dag.size()); ++id) ++by_distance[dag.distance_of(id)];
      for (auto [d, count] : by_distance) {
        std::cout << "distance " << d << ": " << count << "\n";
      }
      for (auto& [rank, ids] : dag.nodes_by_rank()) {
        std::cout << "rank " << rank << ": " << ids.size() << "\n";
      }
      break;
    }
  }
  return 0;
}

int factor_exit(const FactorReport& report) {
  if (!report.contained) return 2;
  return report.is_free_factor ? 0 : 1;
}

int run_is_free_factor(int k, const std::string& sub, const std::string& sup,
                       std::size_t max_nodes, Format format) {
  FactorReport report = is_free_factor(GeneratingSet::parse(sub, k), GeneratingSet::parse(sup, k),
                                       FringeOptions{max_nodes});
  if (format == Format::Json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    if (!report.contained) {
      std::cout << "not contained\n";
    } else {
      std::cout << (report.is_free_factor ? "free factor" : "contained but not a free factor")
                << "; rho=" << *report.rho << " rank_gap=" << *report.rank_gap
                << " complementary_generators=" << *report.complementary_generators << "\n";
    }
  }
  return factor_exit(report);
}

int run_is_primitive(int k, const std::string& word_str, std::size_t max_nodes, Format format) {
  Word w = Word::parse(word_str, k);
  if (w.is_identity()) throw PreconditionError("is-primitive: word must be nonempty");
  PrimitivityReport report =
      primitivity_report(GeneratingSet{k, {w}}, FringeOptions{max_nodes});
  const bool primitive = report.pi_is_infinity();
  if (format == Format::Json) {
    nlohmann::json j = to_json(report);
    j["primitive"] = primitive;
    std::cout << j.dump(2) << "\n";
  } else if (primitive) {
    std::cout << "primitive\n";
  } else {
    std::cout << "not primitive; pi=" << *report.pi << "\n";
  }
  return primitive ? 0 : 1;
}

int run_comp_gens(int k, const std::string& sub, const std::string& sup, std::size_t max_nodes,
                  Format format) {
  int t = complementary_generator_count(GeneratingSet::parse(sub, k),
                                        GeneratingSet::parse(sup, k), FringeOptions{max_nodes});
  if (format == Format::Json) {
    std::cout << nlohmann::json{{"complementary_generators_needed", t}}.dump(2) << "\n";
  } else {
    std::cout << t << "\n";
  }
  return 0;
}

int run_pi(int k, const std::string& gens_str, std::size_t max_nodes, Format format) {
  PrimitivityReport report =
      primitivity_report(GeneratingSet::parse(gens_str, k), FringeOptions{max_nodes});
  if (format == Format::Json) {
    std::cout << to_json(report).dump(2) << "\n";
    return 0;
  }
  std::cout << "pi: " << (report.pi ? std::to_string(*report.pi) : std::string("infinity"));
  if (report.degenerate) std::cout << " (degenerate: trivial subgroup)";
  std::cout << "\n";
  std::cout << "critical subgroups: " << report.critical_subgroups.size() << "\n";
  for (const CoreGraph& g : report.critical_subgroups) {
    std::cout << "  rank " << g.rank() << ": <";
    bool first = true;
    for (const Word& w : g.subgroup_basis()) {
      if (!first) std::cout << ", ";
      first = false;
      std::cout << w.render();
    }
    std::cout << ">\n";
  }
  std::cout << "algebraic extensions: " << report.algebraic_extensions.size() << "\n";
  return 0;
}

int run_phi(int k, const std::string& gens_str, int order, long eval_n, std::size_t max_nodes,
            Format format) {
  GeneratingSet gens = GeneratingSet::parse(gens_str, k);
  FringeDag dag = enumerate_fringe(build_core_graph(gens), FringeOptions{max_nodes});
  const int effective_order = order >= 0 ? order : dag.root().rank() + 3;
  PhiReport report = phi_series(dag, effective_order, FringeOptions{max_nodes});

  if (format == Format::Json) {
    nlohmann::json j = to_json(report);
    if (eval_n > 0) j["value_at_n"] = phi_closed_form(dag, eval_n).get_str();
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "series in u=1/n, order " << report.series.order() << ":";
  for (const Integer& c : report.series.coefficients) std::cout << " " << c.get_str();
  std::cout << "\nphi: " << describe_phi(report.phi) << "\n";
  std::cout << "valid from: n >= " << report.valid_from << "\n";

  std::cout << "closed form: Phi(n) = -1/n^" << dag.root().rank() << "\n";
  std::map<std::string, int> terms;
  for (int id = 0; id < static_cast<int>(dag.size()); ++id) ++terms[term_string(dag.node(id))];
  for (const auto& [term, count] : terms) {
    std::cout << "  + ";
    if (count > 1) std::cout << count << " * ";
    std::cout << term << "\n";
  }
  if (eval_n > 0) {
    std::cout << "Phi(" << eval_n << ") = " << phi_closed_form(dag, eval_n).get_str() << "\n";
  }
  return 0;
}

int run_upsilon(int k, const std::string& gens_str, Format format) {
  CoreGraph g = build_core_graph(GeneratingSet::parse(gens_str, k));
  UpsilonGraph u = build_upsilon(g);
  if (format == Format::Dot) {
    std::cout << to_dot(u);
    return 0;
  }
  const int components = component_count(u);
  const std::size_t quotients = immediate_quotient_count(g);
  const bool forest = is_forest(u);
  const bool correspondence = quotients == static_cast<std::size_t>(components);
  if (format == Format::Json) {
    std::cout << nlohmann::json{{"vertices", u.vertex_count()},
                                {"edges", u.edge_count()},
                                {"components", components},
                                {"forest", forest},
                                {"immediate_quotients", quotients},
                                {"correspondence", correspondence}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "vertices: " << u.vertex_count() << "\nedges: " << u.edge_count()
              << "\ncomponents: " << components << "\nforest: " << (forest ? "yes" : "no")
              << "\nimmediate quotients: " << quotients
              << "\ncorrespondence: " << (correspondence ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_sample(int k, const std::string& gens_str, int n, long trials, std::uint64_t seed,
               bool fixed_points, bool exhaustive, int budget_n, int budget_k, Format format) {
  GeneratingSet gens = GeneratingSet::parse(gens_str, k);
  EstimateReport report;
  if (exhaustive) {
    report = exhaustive_report(gens, n, ExhaustiveBudget{budget_n, budget_k});
  } else if (fixed_points) {
    if (gens.generators.size() != 1) {
      throw PreconditionError("--fixed-points expects a single word");
    }
    report = average_fixed_points_mc(gens.generators[0], n, trials, seed);
  } else {
    report = monte_carlo_probability(gens, n, trials, seed);
  }

  if (format == Format::Json) {
    std::cout << to_json(report).dump(2) << "\n";
    return 0;
  }
  std::cout << (report.kind == EstimateReport::Kind::Probability ? "probability estimate: "
                                                                 : "mean fixed points: ")
            << report.estimate << "\n";
  std::cout << "standard error: " << report.standard_error << "\n";
  std::cout << "trials: " << report.trials << "\n";
  if (report.exact) std::cout << "exact: " << report.exact->get_str() << "\n";
  if (!exhaustive) std::cout << "seed: " << report.seed << " rng: " << report.rng_name << "\n";
  return 0;
}

int run_oracle(int k, const std::string& gens_str, int n, int budget_n, int budget_k,
               std::size_t max_nodes, Format format) {
  GeneratingSet gens = GeneratingSet::parse(gens_str, k);
  mpq_class measured = exhaustive_probability(gens, n, ExhaustiveBudget{budget_n, budget_k});

  FringeDag dag = enumerate_fringe(build_core_graph(gens), FringeOptions{max_nodes});
  Integer nr;
  mpz_ui_pow_ui(nr.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(dag.root().rank()));
  mpq_class predicted = phi_closed_form(dag, n) + Rational(1, nr);
  predicted.canonicalize();

  const bool equal = measured == predicted;
  if (format == Format::Json) {
    std::cout << nlohmann::json{{"exhaustive", measured.get_str()},
                                {"closed_form", predicted.get_str()},
                                {"equal", equal}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "exhaustive:  " << measured.get_str() << "\n";
    std::cout << "closed form: " << predicted.get_str() << "\n";
    std::cout << "equal: " << (equal ? "yes" : "no") << "\n";
  }
  return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computation in free groups via Stallings core graphs"};
  app.require_subcommand(1);

  std::function<int()> action;

  // Shared option storage; each subcommand binds what it needs.
  int k = 2;
  std::string gens_str, sub_str, sup_str;
  std::size_t max_nodes = 100'000;
  int order = -1;
  long eval_n = 0;
  int sample_n = 0;
  long trials = 100'000;
  std::uint64_t seed = 1;
  bool fixed_points = false, exhaustive = false;
  int budget_n = 5, budget_k = 2;
  FormatFlags core_fmt, fringe_fmt, ff_fmt, prim_fmt, comp_fmt, pi_fmt, phi_fmt, ups_fmt,
      sample_fmt, oracle_fmt;

  auto* core_cmd = app.add_subcommand("core-graph", "Build a core graph from generators");
  core_cmd->add_option("-k,--rank", k, "ambient rank")->required();
  core_cmd->add_option("gens", gens_str, "comma-separated generator words")->required();
  add_format_flags(core_cmd, core_fmt, true);
  core_cmd->callback([&] { action = [&] { return run_core_graph(k, gens_str, core_fmt.pick()); }; });

  auto* fringe_cmd = app.add_subcommand("fringe", "Enumerate all quotients of a core graph");
  fringe_cmd->add_option("-k,--rank", k, "ambient rank")->required();
  fringe_cmd->add_option("gens", gens_str, "comma-separated generator words")->required();
  fringe_cmd->add_option("--max-nodes", max_nodes, "node cap");
  add_format_flags(fringe_cmd, fringe_fmt, true);
  fringe_cmd->callback(
      [&] { action = [&] { return run_fringe(k, gens_str, max_nodes, fringe_fmt.pick()); }; });

  auto* ff_cmd = app.add_subcommand("is-free-factor", "Decide whether sub is a free factor of sup");
  ff_cmd->add_option("-k,--rank", k, "ambient rank")->required();
  ff_cmd->add_option("--sub", sub_str, "generators of the candidate free factor")->required();
  ff_cmd->add_option("--sup", sup_str, "generators of the supergroup")->required();
  ff_cmd->add_option("--max-nodes", max_nodes, "node cap");
  add_format_flags(ff_cmd, ff_fmt, false);
  ff_cmd->callback([&] {
    action = [&] { return run_is_free_factor(k, sub_str, sup_str, max_nodes, ff_fmt.pick()); };
  });

  auto* prim_cmd = app.add_subcommand("is-primitive", "Decide whether a word is primitive");
  prim_cmd->add_option("-k,--rank", k, "ambient rank")->required();
  prim_cmd->add_option("word", gens_str, "the word")->required();
  prim_cmd->add_option("--max-nodes", max_nodes, "node cap");
  add_format_flags(prim_cmd, prim_fmt, false);
  prim_cmd->callback(
      [&] { action = [&] { return run_is_primitive(k, gens_str, max_nodes, prim_fmt.pick()); }; });

  auto* comp_cmd =
      app.add_subcommand("comp-gens", "Minimal number of complementary generators (sub <= sup)");
  comp_cmd->add_option("-k,--rank", k, "ambient rank")->required();
  comp_cmd->add_option("--sub", sub_str, "generators of the subgroup")->required();
  comp_cmd->add_option("--sup", sup_str, "generators of the supergroup")->required();
  comp_cmd->add_option("--max-nodes", max_nodes, "node cap");
  add_format_flags(comp_cmd, comp_fmt, false);
  comp_cmd->callback([&] {
    action = [&] { return run_comp_gens(k, sub_str, sup_str, max_nodes, comp_fmt.pick()); };
  });

  auto* pi_cmd =
      app.add_subcommand("pi", "Primitivity rank, critical subgroups, algebraic extensions");
  pi_cmd->add_option("-k,--rank", k, "ambient rank")->required();
  pi_cmd->add_option("gens", gens_str, "comma-separated generator words")->required();
  pi_cmd->add_option("--max-nodes", max_nodes, "node cap");
  add_format_flags(pi_cmd, pi_fmt, false);
  pi_cmd->callback([&] { action = [&] { return run_pi(k, gens_str, max_nodes, pi_fmt.pick()); }; });

  auto* phi_cmd = app.add_subcommand("phi", "Exact series and closed form of Phi_H(n)");
  phi_cmd->add_option("-k,--rank", k, "ambient rank")->required();
  phi_cmd->add_option("gens", gens_str, "comma-separated generator words")->required();
  phi_cmd->add_option("--order", order, "series truncation order (default rank+3)")
      ->check(CLI::NonNegativeNumber);
  phi_cmd->add_option("--n", eval_n, "also evaluate the closed form at this n");
  phi_cmd->add_option("--max-nodes", max_nodes, "node cap");
  add_format_flags(phi_cmd, phi_fmt, false);
  phi_cmd->callback([&] {
    action = [&] { return run_phi(k, gens_str, order, eval_n, max_nodes, phi_fmt.pick()); };
  });

  auto* ups_cmd = app.add_subcommand("upsilon", "Pair graph of a core graph");
  ups_cmd->add_option("-k,--rank", k, "ambient rank")->required();
  ups_cmd->add_option("gens", gens_str, "comma-separated generator words")->required();
  add_format_flags(ups_cmd, ups_fmt, true);
  ups_cmd->callback([&] { action = [&] { return run_upsilon(k, gens_str, ups_fmt.pick()); }; });

  auto* sample_cmd =
      app.add_subcommand("sample", "Permutation sampling of the stabilizer event");
  sample_cmd->add_option("-k,--rank", k, "ambient rank")->required();
  sample_cmd->add_option("gens", gens_str, "comma-separated generator words")->required();
  sample_cmd->add_option("--n", sample_n, "symmetric group degree")->required();
  sample_cmd->add_option("--trials", trials, "Monte Carlo trials");
  sample_cmd->add_option("--seed", seed, "PRNG seed");
  sample_cmd->add_flag("--fixed-points", fixed_points,
                       "estimate the mean fixed-point count of a single word");
  sample_cmd->add_flag("--exhaustive", exhaustive, "enumerate all tuples exactly");
  sample_cmd->add_option("--budget-n", budget_n, "exhaustive budget for n");
  sample_cmd->add_option("--budget-k", budget_k, "exhaustive budget for k");
  add_format_flags(sample_cmd, sample_fmt, false);
  sample_cmd->callback([&] {
    action = [&] {
      return run_sample(k, gens_str, sample_n, trials, seed, fixed_points, exhaustive, budget_n,
                        budget_k, sample_fmt.pick());
    };
  });

  auto* oracle_cmd =
      app.add_subcommand("oracle", "Cross-check the closed form against exhaustive enumeration");
  oracle_cmd->add_option("-k,--rank", k, "ambient rank")->required();
  oracle_cmd->add_option("gens", gens_str, "comma-separated generator words")->required();
  oracle_cmd->add_option("--n", sample_n, "symmetric group degree")->required();
  oracle_cmd->add_option("--budget-n", budget_n, "exhaustive budget for n");
  oracle_cmd->add_option("--budget-k", budget_k, "exhaustive budget for k");
  oracle_cmd->add_option("--max-nodes", max_nodes, "node cap");
  add_format_flags(oracle_cmd, oracle_fmt, false);
  oracle_cmd->callback([&] {
    action = [&] {
      return run_oracle(k, gens_str, sample_n, budget_n, budget_k, max_nodes, oracle_fmt.pick());
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action();
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
