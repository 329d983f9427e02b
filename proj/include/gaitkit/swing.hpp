#pragma once

namespace gaitkit {

// Linear ramp from 0 at t0 to target at t0 + duration, clamped outside.
// Throws InvalidDurationError unless duration > 0.
double ramp(double t, double t0, double duration, double target);

struct SwingProfile {
  double step_length = 0.0;    // forward travel of the foot, >= 0
  double step_height = 0.02;   // peak clearance, > 0
  double apex_fraction = 0.4;  // phase of peak height, in (0, 1)

  void validate() const;  // throws InvalidParamsError
};

// Foot displacement at swing phase u in [0, 1]: dx forward over the ground,
// dz lift above it.
struct SwingPoint {
  double dx = 0.0;
  double dz = 0.0;
};

// Quarter-sine rise to the apex, quarter-cosine fall after it; forward
// motion is a smoothed ramp u - sin(2*pi*u)/(2*pi) that starts and ends at
// rest. Throws PhaseOutOfRangeError for u outside [0, 1].
SwingPoint swing_point(double u, const SwingProfile& profile);

}  // namespace gaitkit
