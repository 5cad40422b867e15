#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lieham/integrate.hpp"
#include "lieham/lie_algebra.hpp"
#include "lieham/verify.hpp"

namespace lieham {

/// User-supplied algebra schema:
/// { "dim": r, "brackets": [ {"i": a, "j": b, "coeffs": ["p/q", ...] } ] }
/// with 1-based indices, rationals as "p/q" strings or integers, omitted
/// pairs zero.
StructureConstants algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const StructureConstants& sc);

nlohmann::json catalog_to_json(const CatalogEntry& entry);

CoefficientSpec coefficient_from_json(const nlohmann::json& j);
nlohmann::json coefficient_to_json(const CoefficientSpec& spec);

nlohmann::json validation_to_json(const ValidationReport& rep);
nlohmann::json checks_to_json(const std::vector<verify::CheckResult>& results);

nlohmann::json trajectory_stats_json(const Trajectory& traj);
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

/// printf("%.17g") formatting used for CSV payloads.
std::string format_double(double v);

}  // namespace lieham
