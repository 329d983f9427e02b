#include "gaitkit/geometry.hpp"

#include <cmath>
#include <string>

#include "gaitkit/errors.hpp"

namespace gaitkit {

namespace {

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw InvalidParamsError(std::string("geometry: ") + name +
                             " must be finite and > 0, got " + std::to_string(v));
  }
}

}  // namespace

void RobotGeometry::validate() const {
  require_positive(thigh_len, "thigh_len");
  require_positive(shank_len, "shank_len");
  require_positive(ankle_height, "ankle_height");
  require_positive(foot_len, "foot_len");
  require_positive(foot_width, "foot_width");
  require_positive(hip_spacing, "hip_spacing");
  if (!std::isfinite(foot_fwd_offset)) {
    throw InvalidParamsError("geometry: foot_fwd_offset must be finite");
  }
  if (!std::isfinite(com_height_offset) || com_height_offset < 0.0) {
    throw InvalidParamsError("geometry: com_height_offset must be finite and >= 0");
  }
}

}  // namespace gaitkit
