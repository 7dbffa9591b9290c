#pragma once

#include <json.hpp>

#include "unipart/clique_cover.hpp"
#include "unipart/scaling.hpp"
#include "unipart/stats.hpp"
#include "unipart/unitary_group.hpp"

namespace unipart {

// {heuristic, seed, n_groups, groups, group_sizes, max_size, size_std}
nlohmann::json partition_json(const Partition& p);

// Partition document extended with per-group d, coefficients, thetas.
nlohmann::json partition_json(const Partition& p, const std::vector<UnitaryGroup>& groups);

nlohmann::json stats_json(const std::vector<StatsRecord>& records);

// Pulls (n_qubits, total, groups-under-heuristic) triples back out of a
// stats document for the scaling fit.
std::vector<ScalingPoint> scaling_points(const nlohmann::json& stats, const std::string& heuristic,
                                         bool include_identity);

}  // namespace unipart
