#ifndef STALLINGS_EMIT_HPP
#define STALLINGS_EMIT_HPP

#include <string>

#include <json.hpp>

#include "stallings/algebraic.hpp"
#include "stallings/core_graph.hpp"
#include "stallings/factor.hpp"
#include "stallings/fringe.hpp"
#include "stallings/sampler.hpp"
#include "stallings/series.hpp"
#include "stallings/upsilon.hpp"

namespace stallings {

// DOT renderings. The basepoint is drawn as a double circle; edges carry
// "x<j>" labels. Fringe nodes are annotated with (rank, distance) so the
// quotient DAG can be inspected visually.
std::string to_dot(const CoreGraph& g);
std::string to_dot(const FringeDag& dag);
std::string to_dot(const UpsilonGraph& u);

nlohmann::json to_json(const CoreGraph& g);
nlohmann::json to_json(const FringeDag& dag);
nlohmann::json to_json(const FactorReport& report);
nlohmann::json to_json(const PrimitivityReport& report);
nlohmann::json to_json(const PhiReport& report);
nlohmann::json to_json(const EstimateReport& report);

}  // namespace stallings

#endif
