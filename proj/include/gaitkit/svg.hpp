#pragma once

#include <string>

#include "gaitkit/planner.hpp"

namespace gaitkit {

// Top-down SVG of the walk: every foot placement, the support polygon at
// each phase boundary, and the CoM ground path. Same input, same bytes.
std::string render_walk_svg(const Trajectory& traj, const RobotGeometry& geom);

}  // namespace gaitkit
