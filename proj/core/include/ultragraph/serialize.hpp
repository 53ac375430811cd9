#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ultragraph/dendrogram.hpp"
#include "ultragraph/explorer.hpp"
#include "ultragraph/gh.hpp"
#include "ultragraph/metric.hpp"

namespace ultragraph {

/// Header row of vertex ids, then one row per vertex; values are integers or p/q.
std::string to_csv(const DistanceMatrix& dm);

/// {"vertices": [...], "matrix": [[...], ...]} with every value a string.
nlohmann::json to_json(const DistanceMatrix& dm);

/// Inverse of to_json(DistanceMatrix). Throws PreconditionError on a
/// malformed document or an invalid matrix.
DistanceMatrix distance_matrix_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const DistanceSet& ds);
nlohmann::json to_json(const GHReport& report);

/// Nested {"height", "children"} for internal nodes and {"leaf"} for points.
nlohmann::json to_json(const Dendrogram& d);

/// Counterexample graphs are embedded in the graph text format. The worker
/// count is not recorded.
nlohmann::json to_json(const ConjectureReport& report);

}  // namespace ultragraph
