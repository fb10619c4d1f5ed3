#pragma once

#include "partq/density_matrix.hpp"
#include "partq/lattice.hpp"
#include "partq/logical_entropy.hpp"
#include "partq/partition.hpp"
#include "partq/prob_dist.hpp"
#include "partq/qmsets.hpp"

#include <json.hpp>

#include <string>

namespace partq {

// Schemas (all shown in README.md):
//   universe:     ["a","b","c"]
//   partition:    {"universe": [...], "blocks": [["a","b"],["c"]]}
//   distribution: {"universe": [...], "p": ["1/2","1/4","1/4"]} or a bare
//                 array of rationals (labels are synthesized)
//   density:      {"basis": [...], "re": [[...]], "im": [[...]]} (im optional)
//   eigenvalue fn {"f": {"a": 1.0, "b": 1.0, "c": -1.0}}
//   scenario:     {"detection": true, "evolution": {"a": ["a","b"], ...}}
// Rationals always travel as "num/den" strings.

nlohmann::json to_json(const Universe& u);
Universe parse_universe(const nlohmann::json& j);

nlohmann::json to_json(const Partition& pi);
Partition parse_partition(const nlohmann::json& j);

nlohmann::json to_json(const PairRelation& r);

nlohmann::json to_json(const ProbDist& p);
ProbDist parse_prob_dist(const nlohmann::json& j);

nlohmann::json to_json(const DensityMatrix& rho);
DensityMatrix parse_density(const nlohmann::json& j, double eps = kDefaultEps);

nlohmann::json to_json(const AmplitudeVector& v);

EigenvalueFunction parse_eigenvalue_function(const nlohmann::json& j, const Universe& universe);

nlohmann::json to_json(const LatticeGraph& g);
nlohmann::json to_json(const BoxDiagram& b);

nlohmann::json to_json(const qmsets::SubsetVector& v);
qmsets::SubsetVector parse_subset_vector(const nlohmann::json& j, const Universe& universe);

qmsets::SlitScenario parse_scenario(const nlohmann::json& j);
nlohmann::json to_json(const qmsets::OutcomeDist& d);
nlohmann::json to_json(const std::vector<qmsets::TraceEvent>& trace);
nlohmann::json to_json(const qmsets::KetTable& t);

/// Parses text into json with errors mapped to ParseError.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace partq
