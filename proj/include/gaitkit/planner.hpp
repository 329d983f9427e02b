#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaitkit/geometry.hpp"
#include "gaitkit/kinematics.hpp"

namespace gaitkit {

struct GaitParams {
  int n_steps = 2;              // full steps between the opening and closing half steps
  double step_length = 0.06;    // full-step stride, meters
  double step_height = 0.02;    // swing apex clearance, meters
  double sway_angle = 0.15;     // lateral lean, radians; 0 disables sway
  double phase_duration = 1.0;  // seconds per phase, uniform
  double sample_rate = 50.0;    // Hz
  std::optional<double> crouch_hip_height;  // default 0.9 * (thigh + shank)

  double crouch_for(const RobotGeometry& geom) const;
  void validate() const;  // throws InvalidParamsError
};

enum class PhaseKind {
  InitialStance,
  LateralShift,
  HalfStep,
  ShiftAndAdvance,
  FullStep,
  FinalHalfStep,
  Recenter,
};

// For shift phases `leg` is the side the pelvis leans toward (the next
// stance foot); for step phases it is the swing leg.
struct GaitPhase {
  PhaseKind kind = PhaseKind::InitialStance;
  Leg leg = Leg::Left;
  double advance = 0.0;  // hip travel during ShiftAndAdvance, meters
  double start = 0.0;
  double duration = 0.0;

  bool is_swing() const {
    return kind == PhaseKind::HalfStep || kind == PhaseKind::FullStep ||
           kind == PhaseKind::FinalHalfStep;
  }
  Leg swing_leg() const { return leg; }
  Leg stance_leg() const { return other(leg); }
};

const char* phase_kind_name(PhaseKind kind);
std::string phase_label(const GaitPhase& phase);

const GaitPhase& phase_at(const std::vector<GaitPhase>& phases, double t);

struct Trajectory {
  std::vector<JointPose> samples;  // uniform in t, first at 0, last at duration()
  std::vector<GaitPhase> phases;
  RobotGeometry geom;
  double sample_rate = 0.0;

  double duration() const {
    return phases.empty() ? 0.0 : phases.back().start + phases.back().duration;
  }
};

// The walk cycle: stand, lean onto the first stance side, half step, then for
// each full step lean onto the new stance foot while the hips catch up half a
// stride, swing; finally a closing half step brings the feet level and the
// pelvis recenters. Swing legs alternate starting with the left.
std::vector<GaitPhase> plan_phases(const GaitParams& params);

// Pose at any time, phases evaluated analytically (no integration): the
// walk state (per-foot x, sway) is folded over completed phases and the
// active phase applies its partial effect. Throws UnreachableError if a
// target leaves the workspace, InvalidParamsError for t outside the plan.
JointPose pose_at(double t, const std::vector<GaitPhase>& phases,
                  const GaitParams& params, const RobotGeometry& geom);

// Samples pose_at on the uniform grid. Throws PlanError (naming phase and
// time) if any sample is unreachable.
Trajectory plan_walk(const GaitParams& params, const RobotGeometry& geom);

}  // namespace gaitkit
