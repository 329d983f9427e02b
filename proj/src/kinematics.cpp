#include "gaitkit/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gaitkit/errors.hpp"

namespace gaitkit {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

}  // namespace

UnreachableError::UnreachableError(double distance_, double min_reach_,
                                   double max_reach_)
    : Error([&] {
        std::ostringstream os;
        os << "target at distance " << distance_ << " outside reach ["
           << min_reach_ << ", " << max_reach_ << "]";
        return os.str();
      }()),
      distance(distance_),
      min_reach(min_reach_),
      max_reach(max_reach_) {}

SagittalTarget fk_sagittal(double hip_pitch, double knee_pitch,
                           const RobotGeometry& geom) {
  // Angles accumulate down the chain; the shank points along hip + knee.
  const double thigh_dir = hip_pitch;
  const double shank_dir = hip_pitch + knee_pitch;
  return {geom.thigh_len * std::sin(thigh_dir) + geom.shank_len * std::sin(shank_dir),
          geom.thigh_len * std::cos(thigh_dir) + geom.shank_len * std::cos(shank_dir)};
}

SagittalIk ik_sagittal(const SagittalTarget& target, const RobotGeometry& geom) {
  const double t = geom.thigh_len;
  const double s = geom.shank_len;
  const double h = std::hypot(target.x, target.y);
  if (h == 0.0) {
    throw DegenerateGeometryError("ik target coincides with the hip joint");
  }
  const double min_reach = std::abs(t - s);
  const double max_reach = t + s;
  const double slack = 1e-9 * max_reach;
  if (h < min_reach - slack || h > max_reach + slack) {
    throw UnreachableError(h, min_reach, max_reach);
  }

  SagittalIk ik;
  ik.hypotenuse = h;
  // Bearing measured from straight-down, so the arguments are (x, y) and not
  // the usual (y, x).
  ik.alpha = std::atan2(target.x, target.y);
  // Law of cosines in the hip-knee-ankle triangle. Clamping absorbs the
  // rounding just outside [-1, 1] that the reach slack lets through.
  ik.beta = std::acos(clamp_unit((t * t - s * s + h * h) / (2.0 * t * h)));
  ik.gamma = std::acos(clamp_unit((t * t + s * s - h * h) / (2.0 * t * s)));
  // With knee = pi - gamma >= 0 the thigh must lead the chord by exactly
  // beta, which pins the hip angle.
  ik.hip_pitch = ik.alpha - ik.beta;
  ik.knee_pitch = kPi - ik.gamma;
  return ik;
}

double ankle_pitch_flat(double hip_pitch, double knee_pitch) {
  return -(hip_pitch + knee_pitch);
}

double ankle_pitch_flat_by_intersection(double hip_pitch, double knee_pitch,
                                        const RobotGeometry& geom) {
  // Extend the shank line until it crosses the ground-parallel axis through
  // the hip (sagittal frame, y down). The triangle formed by that crossing
  // I, the ankle A, and the ankle's vertical drop P onto the axis has its
  // angle at I equal to the shank's inclination from horizontal; the sole is
  // level when the foot tilts back by the complement of that angle.
  const double shank_dir = hip_pitch + knee_pitch;
  const double kx = geom.thigh_len * std::sin(hip_pitch);
  const double ky = geom.thigh_len * std::cos(hip_pitch);
  const double ax = kx + geom.shank_len * std::sin(shank_dir);
  const double ay = ky + geom.shank_len * std::cos(shank_dir);

  const double diry = std::cos(shank_dir);
  if (std::abs(diry) < 1e-12) {
    throw DegenerateGeometryError("horizontal shank: no axis crossing");
  }
  const double steps_to_axis = -ay / diry;
  const double ix = ax + steps_to_axis * std::sin(shank_dir);

  const double v1x = ax - ix;
  const double v1y = ay;
  const double v2x = ax - ix;  // P sits directly above/below A on the axis
  const double v1n = std::hypot(v1x, v1y);
  const double v2n = std::abs(v2x);
  if (v2n < 1e-12 || v1n < 1e-12) {
    throw DegenerateGeometryError("vertical shank: triangle collapses");
  }
  const double cp = std::acos(clamp_unit((v1x * v2x) / (v1n * v2n)));
  const double tilt = kPi / 2.0 - cp;
  return shank_dir >= 0.0 ? -tilt : tilt;
}

SwayAngles lateral_sway_angles(double theta) {
  // Equal and opposite rolls: the ankle tilts the whole leg sideways and the
  // hip takes the tilt back out, leaving the pelvis level over soles that
  // stay flat.
  return {theta, -theta};
}

LegTargets hip_advance_targets(const LegTargets& targets, double d) {
  return {{targets.left.x - d, targets.left.y},
          {targets.right.x - d, targets.right.y}};
}

}  // namespace gaitkit
