#pragma once

#include "gaitkit/geometry.hpp"

namespace gaitkit {

// Every leg solve happens in that leg's sagittal plane: origin at the hip
// pitch joint, x forward, y positive DOWNWARD. The straight-down leg with
// zero joint angles puts the ankle at (0, thigh_len + shank_len).
struct SagittalTarget {
  double x = 0.0;
  double y = 0.0;
};

struct LegTargets {
  SagittalTarget left;
  SagittalTarget right;
};

enum class Leg { Left, Right };

inline Leg other(Leg leg) { return leg == Leg::Left ? Leg::Right : Leg::Left; }
inline const char* leg_name(Leg leg) { return leg == Leg::Left ? "left" : "right"; }

// Joint angles, radians. All-zero is the leg extended straight down with the
// sole flat. Positive pitch rotates the distal link forward; positive roll
// tilts the distal end toward the robot's left.
struct LegAngles {
  double hip_roll = 0.0;
  double hip_pitch = 0.0;
  double knee_pitch = 0.0;
  double ankle_pitch = 0.0;
  double ankle_roll = 0.0;
};

struct JointPose {
  LegAngles left;
  LegAngles right;
  double t = 0.0;

  LegAngles& leg(Leg side) { return side == Leg::Left ? left : right; }
  const LegAngles& leg(Leg side) const { return side == Leg::Left ? left : right; }
};

// Closed-form two-link solution with the law-of-cosines intermediates kept
// visible for inspection.
struct SagittalIk {
  double hip_pitch = 0.0;
  double knee_pitch = 0.0;   // in [0, pi]
  double hypotenuse = 0.0;   // hip-to-ankle chord length
  double alpha = 0.0;        // chord bearing from the straight-down axis
  double beta = 0.0;         // angle between chord and thigh, at the hip
  double gamma = 0.0;        // interior knee angle between thigh and shank
};

// Ankle position for given pitch angles.
SagittalTarget fk_sagittal(double hip_pitch, double knee_pitch,
                           const RobotGeometry& geom);

// Inverse of fk_sagittal on the knee >= 0 branch. Throws UnreachableError
// outside the annulus [|T-S|, T+S] (with a 1e-9*(T+S) boundary allowance)
// and DegenerateGeometryError for a target at the hip itself.
SagittalIk ik_sagittal(const SagittalTarget& target, const RobotGeometry& geom);

// Ankle pitch that keeps the sole parallel to the ground: -(hip + knee).
double ankle_pitch_flat(double hip_pitch, double knee_pitch);

// Same quantity obtained by intersecting the extended shank line with the
// ground-parallel axis through the hip and reading the angle in the triangle
// formed with the ankle's vertical projection. Exists as an independent
// route for cross-checking; throws DegenerateGeometryError for a vertical
// shank, where the triangle collapses.
double ankle_pitch_flat_by_intersection(double hip_pitch, double knee_pitch,
                                        const RobotGeometry& geom);

// Roll pair that leans the pelvis sideways by theta while keeping it level
// and both soles flat: hip and ankle rolls cancel. Positive theta shifts
// the pelvis toward the right foot. Same values apply to both legs.
struct SwayAngles {
  double hip_roll = 0.0;
  double ankle_roll = 0.0;
};

SwayAngles lateral_sway_angles(double theta);

// Stance targets expressed in the hip frame slide backward when the hips
// advance by d over the ground.
LegTargets hip_advance_targets(const LegTargets& targets, double d);

}  // namespace gaitkit
