#include "gaitkit/planner.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gaitkit/errors.hpp"
#include "gaitkit/swing.hpp"

namespace gaitkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTimeSlack = 1e-9;

double sway_sign(Leg side) { return side == Leg::Right ? 1.0 : -1.0; }

double swing_length(const GaitPhase& phase, const GaitParams& params) {
  return phase.kind == PhaseKind::FullStep ? params.step_length
                                           : params.step_length / 2.0;
}

bool kind_has_leg(PhaseKind kind) {
  return kind != PhaseKind::InitialStance && kind != PhaseKind::Recenter;
}

// Per-foot hip-frame x and current sway; the whole gait state.
struct WalkState {
  double left_x = 0.0;
  double right_x = 0.0;
  double sway = 0.0;

  double& x(Leg leg) { return leg == Leg::Left ? left_x : right_x; }
};

WalkState after_phase(WalkState s, const GaitPhase& phase,
                      const GaitParams& params) {
  switch (phase.kind) {
    case PhaseKind::InitialStance:
      break;
    case PhaseKind::LateralShift:
      s.sway = sway_sign(phase.leg) * params.sway_angle;
      break;
    case PhaseKind::ShiftAndAdvance:
      s.sway = sway_sign(phase.leg) * params.sway_angle;
      s.left_x -= phase.advance;
      s.right_x -= phase.advance;
      break;
    case PhaseKind::HalfStep:
    case PhaseKind::FullStep:
    case PhaseKind::FinalHalfStep:
      s.x(phase.leg) += swing_length(phase, params);
      break;
    case PhaseKind::Recenter:
      s.sway = 0.0;
      break;
  }
  return s;
}

std::size_t phase_index_at(const std::vector<GaitPhase>& phases, double t) {
  for (std::size_t i = 0; i + 1 < phases.size(); ++i) {
    if (t < phases[i].start + phases[i].duration) return i;
  }
  return phases.size() - 1;
}

}  // namespace

PlanError::PlanError(const std::string& phase_, double t_,
                     const UnreachableError& cause)
    : Error([&] {
        std::ostringstream os;
        os << "infeasible plan: " << cause.what() << " during " << phase_
           << " at t=" << t_;
        return os.str();
      }()),
      phase(phase_),
      t(t_) {}

double GaitParams::crouch_for(const RobotGeometry& geom) const {
  return crouch_hip_height.value_or(0.9 * geom.leg_len());
}

void GaitParams::validate() const {
  if (n_steps < 0) {
    throw InvalidParamsError("gait: n_steps must be >= 0");
  }
  if (!std::isfinite(step_length) || step_length < 0.0) {
    throw InvalidParamsError("gait: step_length must be finite and >= 0");
  }
  if (!std::isfinite(step_height) || step_height <= 0.0) {
    throw InvalidParamsError("gait: step_height must be finite and > 0");
  }
  // Zero sway is admitted so an intentionally unstable no-sway gait can be
  // planned and then rejected by the checker.
  if (!std::isfinite(sway_angle) || sway_angle < 0.0 || sway_angle >= kPi / 4.0) {
    throw InvalidParamsError("gait: sway_angle must be in [0, pi/4)");
  }
  if (!std::isfinite(phase_duration) || phase_duration <= 0.0) {
    throw InvalidParamsError("gait: phase_duration must be finite and > 0");
  }
  if (!std::isfinite(sample_rate) || sample_rate < 10.0) {
    throw InvalidParamsError("gait: sample_rate must be finite and >= 10");
  }
  if (crouch_hip_height &&
      (!std::isfinite(*crouch_hip_height) || *crouch_hip_height <= 0.0)) {
    throw InvalidParamsError("gait: crouch_hip_height must be finite and > 0");
  }
}

const char* phase_kind_name(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::InitialStance:   return "initial_stance";
    case PhaseKind::LateralShift:    return "lateral_shift";
    case PhaseKind::HalfStep:        return "half_step";
    case PhaseKind::ShiftAndAdvance: return "shift_and_advance";
    case PhaseKind::FullStep:        return "full_step";
    case PhaseKind::FinalHalfStep:   return "final_half_step";
    case PhaseKind::Recenter:        return "recenter";
  }
  return "?";
}

std::string phase_label(const GaitPhase& phase) {
  std::string label = phase_kind_name(phase.kind);
  if (kind_has_leg(phase.kind)) {
    label += std::string("(") + leg_name(phase.leg) + ")";
  }
  return label;
}

const GaitPhase& phase_at(const std::vector<GaitPhase>& phases, double t) {
  if (phases.empty()) {
    throw NoContactError("empty phase schedule");
  }
  const double total = phases.back().start + phases.back().duration;
  if (t < -kTimeSlack || t > total + kTimeSlack) {
    throw NoContactError("t=" + std::to_string(t) + " outside phase schedule");
  }
  return phases[phase_index_at(phases, t)];
}

std::vector<GaitPhase> plan_phases(const GaitParams& params) {
  params.validate();
  std::vector<GaitPhase> phases;
  auto push = [&](PhaseKind kind, Leg leg, double advance = 0.0) {
    GaitPhase ph;
    ph.kind = kind;
    ph.leg = leg;
    ph.advance = advance;
    ph.duration = params.phase_duration;
    ph.start = static_cast<double>(phases.size()) * params.phase_duration;
    phases.push_back(ph);
  };

  push(PhaseKind::InitialStance, Leg::Left);
  if (params.n_steps > 0) {
    // Opening: lean onto the right foot and bring the left half a stride out.
    push(PhaseKind::LateralShift, Leg::Right);
    push(PhaseKind::HalfStep, Leg::Left);

    Leg swing = Leg::Right;
    for (int i = 0; i < params.n_steps; ++i) {
      // The hips catch up half a stride while the weight moves over the
      // foot that will carry the step.
      push(PhaseKind::ShiftAndAdvance, other(swing), params.step_length / 2.0);
      push(PhaseKind::FullStep, swing);
      swing = other(swing);
    }

    // Closing: the trailing foot comes level with a half step.
    push(PhaseKind::ShiftAndAdvance, other(swing), params.step_length / 2.0);
    push(PhaseKind::FinalHalfStep, swing);
  }
  push(PhaseKind::Recenter, Leg::Left);
  return phases;
}

JointPose pose_at(double t, const std::vector<GaitPhase>& phases,
                  const GaitParams& params, const RobotGeometry& geom) {
  if (phases.empty()) {
    throw InvalidParamsError("pose_at: empty phase schedule");
  }
  const double total = phases.back().start + phases.back().duration;
  if (!std::isfinite(t) || t < -kTimeSlack || t > total + kTimeSlack) {
    throw InvalidParamsError("pose_at: t outside [0, total]");
  }
  t = std::clamp(t, 0.0, total);

  const std::size_t idx = phase_index_at(phases, t);
  WalkState state;
  for (std::size_t i = 0; i < idx; ++i) {
    state = after_phase(state, phases[i], params);
  }

  const GaitPhase& ph = phases[idx];
  const double crouch = params.crouch_for(geom);
  LegTargets targets{{state.left_x, crouch}, {state.right_x, crouch}};
  double sway = state.sway;

  switch (ph.kind) {
    case PhaseKind::InitialStance:
      break;
    case PhaseKind::LateralShift:
    case PhaseKind::Recenter: {
      const double goal =
          ph.kind == PhaseKind::Recenter ? 0.0 : sway_sign(ph.leg) * params.sway_angle;
      sway = state.sway + ramp(t, ph.start, ph.duration, goal - state.sway);
      break;
    }
    case PhaseKind::ShiftAndAdvance: {
      const double goal = sway_sign(ph.leg) * params.sway_angle;
      sway = state.sway + ramp(t, ph.start, ph.duration, goal - state.sway);
      targets = hip_advance_targets(targets,
                                    ramp(t, ph.start, ph.duration, ph.advance));
      break;
    }
    case PhaseKind::HalfStep:
    case PhaseKind::FullStep:
    case PhaseKind::FinalHalfStep: {
      SwingProfile profile;
      profile.step_length = swing_length(ph, params);
      profile.step_height = params.step_height;
      const double u = std::clamp((t - ph.start) / ph.duration, 0.0, 1.0);
      const SwingPoint sp = swing_point(u, profile);
      SagittalTarget& swing_target =
          ph.leg == Leg::Left ? targets.left : targets.right;
      swing_target.x += sp.dx;
      swing_target.y -= sp.dz;  // y points down, lift shortens it
      break;
    }
  }

  const SagittalIk left = ik_sagittal(targets.left, geom);
  const SagittalIk right = ik_sagittal(targets.right, geom);
  const SwayAngles roll = lateral_sway_angles(sway);

  JointPose pose;
  pose.t = t;
  pose.left = {roll.hip_roll, left.hip_pitch, left.knee_pitch,
               ankle_pitch_flat(left.hip_pitch, left.knee_pitch), roll.ankle_roll};
  pose.right = {roll.hip_roll, right.hip_pitch, right.knee_pitch,
                ankle_pitch_flat(right.hip_pitch, right.knee_pitch), roll.ankle_roll};
  return pose;
}

Trajectory plan_walk(const GaitParams& params, const RobotGeometry& geom) {
  geom.validate();
  Trajectory traj;
  traj.phases = plan_phases(params);  // validates params
  traj.geom = geom;
  traj.sample_rate = params.sample_rate;

  const double total = traj.duration();
  const long n = std::lround(total * params.sample_rate);
  traj.samples.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    const double t = std::min(static_cast<double>(k) / params.sample_rate, total);
    try {
      traj.samples.push_back(pose_at(t, traj.phases, params, geom));
    } catch (const UnreachableError& e) {
      throw PlanError(phase_label(phase_at(traj.phases, t)), t, e);
    }
  }
  return traj;
}

}  // namespace gaitkit
