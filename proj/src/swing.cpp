#include "gaitkit/swing.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gaitkit/errors.hpp"

namespace gaitkit {

namespace {
constexpr double kPi = std::numbers::pi;
}

InvalidDurationError::InvalidDurationError(double duration_)
    : Error("ramp duration must be > 0, got " + std::to_string(duration_)),
      duration(duration_) {}

PhaseOutOfRangeError::PhaseOutOfRangeError(double u_)
    : Error("swing phase " + std::to_string(u_) + " outside [0, 1]"), u(u_) {}

double ramp(double t, double t0, double duration, double target) {
  if (!(duration > 0.0)) {
    throw InvalidDurationError(duration);
  }
  if (t <= t0) return 0.0;
  if (t >= t0 + duration) return target;
  return target * ((t - t0) / duration);
}

void SwingProfile::validate() const {
  if (!std::isfinite(step_length) || step_length < 0.0) {
    throw InvalidParamsError("swing: step_length must be finite and >= 0");
  }
  if (!std::isfinite(step_height) || step_height <= 0.0) {
    throw InvalidParamsError("swing: step_height must be finite and > 0");
  }
  if (!std::isfinite(apex_fraction) || apex_fraction <= 0.0 || apex_fraction >= 1.0) {
    throw InvalidParamsError("swing: apex_fraction must be in (0, 1)");
  }
}

SwingPoint swing_point(double u, const SwingProfile& profile) {
  profile.validate();
  if (!(u >= 0.0 && u <= 1.0)) {
    throw PhaseOutOfRangeError(u);
  }
  // Exact endpoints keep lift-off and touch-down on the ground and the landed
  // foot exactly step_length ahead.
  if (u == 0.0) return {0.0, 0.0};
  if (u == 1.0) return {profile.step_length, 0.0};

  const double a = profile.apex_fraction;
  // Quarter-sine up, quarter-cosine down: both flat at the apex, and the
  // descent (over the shorter 1-a for a < 0.5) comes down steeper than the
  // late ascent, dropping to the ground with minimal dwell near the peak.
  const double dz =
      u <= a ? profile.step_height * std::sin(kPi / 2.0 * (u / a))
             : profile.step_height * std::cos(kPi / 2.0 * ((u - a) / (1.0 - a)));
  const double dx =
      profile.step_length * (u - std::sin(2.0 * kPi * u) / (2.0 * kPi));
  return {dx, dz};
}

}  // namespace gaitkit
