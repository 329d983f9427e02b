#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

#include "gaitkit/planner.hpp"

namespace gaitkit {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// World frame: x forward, y to the robot's left, z up, ground at z = 0.

struct FootprintRect {
  std::array<Vec2, 4> corners;  // sole rectangle projected to the ground, CCW
  bool in_contact = false;
};

// Convex, counter-clockwise, no duplicate or collinear vertices.
struct SupportPolygon {
  std::vector<Vec2> vertices;
};

// Andrew's monotone chain. Throws DegeneratePolygonError when fewer than
// three distinct points remain or all points are collinear.
SupportPolygon convex_hull(std::vector<Vec2> points);

// Distance from p to the polygon boundary, positive inside, negative
// outside, zero on the boundary.
double signed_margin(const Vec2& p, const SupportPolygon& polygon);

// Which foot the world pose is hung from, and where its ankle meets the
// ground. The anchored sole is taken flat on the ground plane.
struct Anchor {
  Leg side = Leg::Left;
  Vec2 ankle_xy = Vec2::Zero();
};

struct WorldPose {
  FootprintRect left_foot;
  FootprintRect right_foot;
  Vec3 left_ankle = Vec3::Zero();
  Vec3 right_ankle = Vec3::Zero();
  Vec3 left_hip = Vec3::Zero();
  Vec3 right_hip = Vec3::Zero();
  Vec3 pelvis_center = Vec3::Zero();
  Vec3 com = Vec3::Zero();

  Vec2 com_ground() const { return com.head<2>(); }
  const FootprintRect& foot(Leg side) const {
    return side == Leg::Left ? left_foot : right_foot;
  }
  const Vec3& ankle(Leg side) const {
    return side == Leg::Left ? left_ankle : right_ankle;
  }
};

// Rigid-chain positions for one pose, built up from the anchored sole.
WorldPose world_pose(const JointPose& pose, const RobotGeometry& geom,
                     const Anchor& anchor);

struct ContactState {
  bool left = true;
  bool right = true;
};

// Contact from the phase schedule alone: swing phases are single support on
// the stance side, everything else is double support. Throws NoContactError
// when t falls outside the schedule.
ContactState contact_at(const std::vector<GaitPhase>& phases, double t);

struct WorldSample {
  double t = 0.0;
  WorldPose pose;
  ContactState contact;
};

// Walks the samples chronologically, re-anchoring onto the stance foot at
// each swing phase entry. Works purely from the recorded joint samples and
// the phase contact schedule; it never consults the planner's targets.
std::vector<WorldSample> reconstruct_world(const Trajectory& traj,
                                           const RobotGeometry& geom);

struct MarginSample {
  double t = 0.0;
  Vec2 com_xy = Vec2::Zero();
  SupportPolygon polygon;
  double margin = 0.0;
  bool double_support = true;
};

struct StabilityReport {
  std::vector<MarginSample> samples;
  double min_margin = 0.0;
  double min_margin_t = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

// The verification pass: support polygon and CoM margin at every sample,
// pass iff min margin >= threshold.
StabilityReport check_trajectory(const Trajectory& traj,
                                 const RobotGeometry& geom, double threshold);

}  // namespace gaitkit
