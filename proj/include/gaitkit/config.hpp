#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gaitkit/geometry.hpp"
#include "gaitkit/planner.hpp"

namespace gaitkit {

struct OutputPaths {
  std::string trajectory = "walk.csv";
  std::string report = "margins.csv";
  std::string svg = "walk.svg";
};

struct RunConfig {
  RobotGeometry geometry;
  GaitParams gait;
  double threshold = 0.0;  // margin threshold, meters; 0.005 is a sane safety value
  OutputPaths output;

  void validate() const;
};

RunConfig config_from_json(const nlohmann::json& j);  // throws ConfigError
nlohmann::json config_to_json(const RunConfig& config);

// Reads and validates a JSON config file. Unknown keys are rejected, missing
// keys take defaults. Throws ConfigError.
RunConfig load_config(const std::string& path);

// Canonical serialization of {geometry, gait} hashed with 64-bit FNV-1a.
// Output paths and threshold deliberately excluded: the hash identifies the
// planned motion, not the check setup.
std::string config_hash(const RunConfig& config);

// The manifest path that belongs to a trajectory CSV path.
std::string manifest_path_for(const std::string& trajectory_path);

}  // namespace gaitkit
