#pragma once

namespace gaitkit {

// Link lengths and contact dimensions, meters. Defaults describe a small
// table-top biped with equal thigh and shank.
struct RobotGeometry {
  double thigh_len = 0.12;          // hip pitch axis to knee axis
  double shank_len = 0.12;          // knee axis to ankle pitch axis
  double ankle_height = 0.03;       // ankle axis to sole plane
  double foot_len = 0.14;           // sole rectangle, along x
  double foot_width = 0.06;         // sole rectangle, along y
  double foot_fwd_offset = 0.02;    // ankle ground point to sole center, +x
  double hip_spacing = 0.08;        // lateral distance between hip centers
  double com_height_offset = 0.05;  // lumped mass point above pelvis center

  double leg_len() const { return thigh_len + shank_len; }

  // Throws InvalidParamsError on a non-finite or non-positive dimension.
  void validate() const;
};

}  // namespace gaitkit
