#include "gaitkit/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gaitkit/errors.hpp"
#include "json_detail.hpp"

namespace gaitkit {

using nlohmann::json;

namespace detail {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* where) {
  if (!j.is_object()) {
    throw ConfigError(std::string(where) + " must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) { known = true; break; }
    }
    if (!known) {
      throw ConfigError(std::string("unknown key \"") + key + "\" in " + where);
    }
  }
}

double get_number(const json& j, const char* key, double fallback,
                  const char* where) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) {
    throw ConfigError(std::string(where) + "." + key + " must be a number");
  }
  return v.get<double>();
}

void parse_geometry(const json& j, RobotGeometry& g) {
  reject_unknown_keys(j,
                      {"thigh_len", "shank_len", "ankle_height", "foot_len",
                       "foot_width", "foot_fwd_offset", "hip_spacing",
                       "com_height_offset"},
                      "geometry");
  g.thigh_len = get_number(j, "thigh_len", g.thigh_len, "geometry");
  g.shank_len = get_number(j, "shank_len", g.shank_len, "geometry");
  g.ankle_height = get_number(j, "ankle_height", g.ankle_height, "geometry");
  g.foot_len = get_number(j, "foot_len", g.foot_len, "geometry");
  g.foot_width = get_number(j, "foot_width", g.foot_width, "geometry");
  g.foot_fwd_offset = get_number(j, "foot_fwd_offset", g.foot_fwd_offset, "geometry");
  g.hip_spacing = get_number(j, "hip_spacing", g.hip_spacing, "geometry");
  g.com_height_offset =
      get_number(j, "com_height_offset", g.com_height_offset, "geometry");
}

void parse_gait(const json& j, GaitParams& p) {
  reject_unknown_keys(j,
                      {"n_steps", "step_length", "step_height", "sway_angle",
                       "crouch_hip_height", "phase_duration", "sample_rate"},
                      "gait");
  if (j.contains("n_steps")) {
    const json& v = j.at("n_steps");
    if (!v.is_number_integer()) {
      throw ConfigError("gait.n_steps must be an integer");
    }
    p.n_steps = v.get<int>();
  }
  p.step_length = get_number(j, "step_length", p.step_length, "gait");
  p.step_height = get_number(j, "step_height", p.step_height, "gait");
  p.sway_angle = get_number(j, "sway_angle", p.sway_angle, "gait");
  p.phase_duration = get_number(j, "phase_duration", p.phase_duration, "gait");
  p.sample_rate = get_number(j, "sample_rate", p.sample_rate, "gait");
  if (j.contains("crouch_hip_height")) {
    p.crouch_hip_height = get_number(j, "crouch_hip_height", 0.0, "gait");
  }
}

json geometry_to_json(const RobotGeometry& g) {
  return json{{"thigh_len", g.thigh_len},
              {"shank_len", g.shank_len},
              {"ankle_height", g.ankle_height},
              {"foot_len", g.foot_len},
              {"foot_width", g.foot_width},
              {"foot_fwd_offset", g.foot_fwd_offset},
              {"hip_spacing", g.hip_spacing},
              {"com_height_offset", g.com_height_offset}};
}

json gait_to_json(const GaitParams& p, const RobotGeometry& g) {
  return json{{"n_steps", p.n_steps},
              {"step_length", p.step_length},
              {"step_height", p.step_height},
              {"sway_angle", p.sway_angle},
              {"crouch_hip_height", p.crouch_for(g)},
              {"phase_duration", p.phase_duration},
              {"sample_rate", p.sample_rate}};
}

}  // namespace detail

namespace {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

void RunConfig::validate() const {
  geometry.validate();
  gait.validate();
  if (!std::isfinite(threshold) || threshold < 0.0) {
    throw InvalidParamsError("threshold must be finite and >= 0");
  }
  if (output.trajectory.empty() || output.report.empty() || output.svg.empty()) {
    throw InvalidParamsError("output paths must be non-empty");
  }
  if (gait.crouch_for(geometry) > geometry.leg_len()) {
    throw InvalidParamsError("crouch_hip_height exceeds leg length");
  }
}

RunConfig config_from_json(const json& j) {
  RunConfig config;
  detail::reject_unknown_keys(j, {"geometry", "gait", "threshold", "output"},
                              "config");
  if (j.contains("geometry")) detail::parse_geometry(j.at("geometry"), config.geometry);
  if (j.contains("gait")) detail::parse_gait(j.at("gait"), config.gait);
  config.threshold = detail::get_number(j, "threshold", config.threshold, "config");
  if (j.contains("output")) {
    const json& out = j.at("output");
    detail::reject_unknown_keys(out, {"trajectory", "report", "svg"}, "output");
    auto get_path = [&](const char* key, std::string fallback) {
      if (!out.contains(key)) return fallback;
      if (!out.at(key).is_string()) {
        throw ConfigError(std::string("output.") + key + " must be a string");
      }
      return out.at(key).get<std::string>();
    };
    config.output.trajectory = get_path("trajectory", config.output.trajectory);
    config.output.report = get_path("report", config.output.report);
    config.output.svg = get_path("svg", config.output.svg);
  }
  return config;
}

json config_to_json(const RunConfig& config) {
  return json{{"geometry", detail::geometry_to_json(config.geometry)},
              {"gait", detail::gait_to_json(config.gait, config.geometry)},
              {"threshold", config.threshold},
              {"output",
               json{{"trajectory", config.output.trajectory},
                    {"report", config.output.report},
                    {"svg", config.output.svg}}}};
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  RunConfig config = config_from_json(j);
  try {
    config.validate();
  } catch (const InvalidParamsError& e) {
    throw ConfigError("invalid config " + path + ": " + e.what());
  }
  return config;
}

std::string config_hash(const RunConfig& config) {
  // json::dump sorts object keys, so this serialization is canonical.
  const json j{{"geometry", detail::geometry_to_json(config.geometry)},
               {"gait", detail::gait_to_json(config.gait, config.geometry)}};
  const std::uint64_t h = fnv1a64(j.dump());
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string manifest_path_for(const std::string& trajectory_path) {
  const std::size_t slash = trajectory_path.find_last_of("/\\");
  const std::size_t dot = trajectory_path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return trajectory_path + ".manifest.json";
  }
  return trajectory_path.substr(0, dot) + ".manifest.json";
}

}  // namespace gaitkit
