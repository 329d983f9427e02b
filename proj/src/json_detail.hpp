#pragma once

#include <initializer_list>

#include <nlohmann/json.hpp>

#include "gaitkit/geometry.hpp"
#include "gaitkit/planner.hpp"

// Shared between config and manifest serialization. All throw ConfigError.
namespace gaitkit::detail {

void reject_unknown_keys(const nlohmann::json& j,
                         std::initializer_list<const char*> allowed,
                         const char* where);
double get_number(const nlohmann::json& j, const char* key, double fallback,
                  const char* where);

void parse_geometry(const nlohmann::json& j, RobotGeometry& g);
void parse_gait(const nlohmann::json& j, GaitParams& p);
nlohmann::json geometry_to_json(const RobotGeometry& g);
nlohmann::json gait_to_json(const GaitParams& p, const RobotGeometry& g);

}  // namespace gaitkit::detail
