#pragma once

#include <string>

#include "gaitkit/config.hpp"
#include "gaitkit/planner.hpp"
#include "gaitkit/stability.hpp"

namespace gaitkit {

// Doubles are written with up to 17 significant digits (shortest
// round-trippable form), so write -> read -> write is byte-identical.
std::string format_double(double v);

// Columns: t, then left leg hip_roll, hip_pitch, knee, ankle_pitch,
// ankle_roll, then the right leg in the same order.
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

// Strict reader: exact header, 11 finite fields per row, uniform time grid
// starting at 0, knee >= 0. Leaves phases/geom empty; callers attach them
// from the manifest. Throws MalformedInputError.
Trajectory read_trajectory_csv(const std::string& path);

// Sidecar JSON that makes a trajectory checkable on its own: the config
// hash, geometry, gait params, and the phase schedule.
struct Manifest {
  std::string config_hash;
  RobotGeometry geometry;
  GaitParams gait;
  std::vector<GaitPhase> phases;
  double sample_rate = 0.0;
  std::size_t n_samples = 0;
};

void write_manifest(const Manifest& manifest, const std::string& path);
Manifest read_manifest(const std::string& path);  // throws MalformedInputError

// Margin report: t,margin,support with support in {single, double}.
void write_report_csv(const StabilityReport& report, const std::string& path);

}  // namespace gaitkit
