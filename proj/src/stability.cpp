#include "gaitkit/stability.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gaitkit/errors.hpp"

namespace gaitkit {

namespace {

using Mat3 = Eigen::Matrix3d;

double cross2(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double s = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + s * ab)).norm();
}

Mat3 rot_x(double a) { return Eigen::AngleAxisd(a, Vec3::UnitX()).toRotationMatrix(); }
Mat3 rot_y(double a) { return Eigen::AngleAxisd(a, Vec3::UnitY()).toRotationMatrix(); }

// One leg's joint positions in the pelvis frame (pelvis center at origin,
// axes world-aligned when the pelvis is level). Pitch rotates about -y so a
// positive angle swings the distal link toward +x; roll rotates about +x.
struct LegChain {
  Vec3 hip;
  Vec3 knee;
  Vec3 ankle;
  Mat3 foot_rot;        // orientation of the foot (sole) frame
  Vec3 sole_center;
  std::array<Vec3, 4> sole_corners;
};

LegChain leg_chain(const LegAngles& leg, Leg side, const RobotGeometry& geom) {
  const double lat = side == Leg::Left ? geom.hip_spacing / 2.0
                                       : -geom.hip_spacing / 2.0;
  LegChain c;
  c.hip = Vec3(0.0, lat, 0.0);
  const Mat3 thigh_rot = rot_x(leg.hip_roll) * rot_y(-leg.hip_pitch);
  c.knee = c.hip + thigh_rot * Vec3(0.0, 0.0, -geom.thigh_len);
  const Mat3 shank_rot = thigh_rot * rot_y(-leg.knee_pitch);
  c.ankle = c.knee + shank_rot * Vec3(0.0, 0.0, -geom.shank_len);
  c.foot_rot = shank_rot * rot_y(-leg.ankle_pitch) * rot_x(leg.ankle_roll);
  c.sole_center =
      c.ankle + c.foot_rot * Vec3(geom.foot_fwd_offset, 0.0, -geom.ankle_height);
  const double hl = geom.foot_len / 2.0;
  const double hw = geom.foot_width / 2.0;
  const Vec3 offsets[4] = {{-hl, -hw, 0.0}, {hl, -hw, 0.0}, {hl, hw, 0.0}, {-hl, hw, 0.0}};
  for (int i = 0; i < 4; ++i) {
    c.sole_corners[i] = c.sole_center + c.foot_rot * offsets[i];
  }
  return c;
}

}  // namespace

SupportPolygon convex_hull(std::vector<Vec2> points) {
  std::sort(points.begin(), points.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Vec2& a, const Vec2& b) {
                             return a.x() == b.x() && a.y() == b.y();
                           }),
               points.end());
  if (points.size() < 3) {
    throw DegeneratePolygonError("support polygon needs 3+ distinct points");
  }

  // Monotone chain; strict turns only, so collinear interior points drop out.
  const std::size_t n = points.size();
  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  const std::size_t lower_end = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower_end && cross2(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  if (hull.size() < 3) {
    throw DegeneratePolygonError("support points are collinear");
  }
  return {std::move(hull)};
}

double signed_margin(const Vec2& p, const SupportPolygon& polygon) {
  const auto& v = polygon.vertices;
  if (v.size() < 3) {
    throw DegeneratePolygonError("signed_margin needs a non-degenerate polygon");
  }
  bool inside = true;
  double dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    if (cross2(a, b, p) < 0.0) inside = false;  // CCW: inside keeps p to the left
    dist = std::min(dist, point_segment_distance(p, a, b));
  }
  return inside ? dist : -dist;
}

WorldPose world_pose(const JointPose& pose, const RobotGeometry& geom,
                     const Anchor& anchor) {
  const LegChain left = leg_chain(pose.left, Leg::Left, geom);
  const LegChain right = leg_chain(pose.right, Leg::Right, geom);
  const LegChain& anchored = anchor.side == Leg::Left ? left : right;

  // Rigid transform that lays the anchored sole flat on the ground with its
  // ankle above anchor.ankle_xy; every other point rides along. This is the
  // ground-up chain evaluated in one shot.
  const Mat3 world_rot = anchored.foot_rot.transpose();
  const Vec3 ankle_world(anchor.ankle_xy.x(), anchor.ankle_xy.y(), geom.ankle_height);
  const Vec3 shift = ankle_world - world_rot * anchored.ankle;
  auto to_world = [&](const Vec3& p) -> Vec3 { return world_rot * p + shift; };

  WorldPose wp;
  wp.left_ankle = to_world(left.ankle);
  wp.right_ankle = to_world(right.ankle);
  wp.left_hip = to_world(left.hip);
  wp.right_hip = to_world(right.hip);
  wp.pelvis_center = to_world(Vec3::Zero());
  wp.com = to_world(Vec3(0.0, 0.0, geom.com_height_offset));
  for (int i = 0; i < 4; ++i) {
    wp.left_foot.corners[i] = to_world(left.sole_corners[i]).head<2>();
    wp.right_foot.corners[i] = to_world(right.sole_corners[i]).head<2>();
  }
  return wp;
}

ContactState contact_at(const std::vector<GaitPhase>& phases, double t) {
  const GaitPhase& ph = phase_at(phases, t);  // throws NoContactError
  ContactState c;
  if (ph.is_swing()) {
    c.left = ph.swing_leg() != Leg::Left;
    c.right = ph.swing_leg() != Leg::Right;
  }
  return c;
}

std::vector<WorldSample> reconstruct_world(const Trajectory& traj,
                                           const RobotGeometry& geom) {
  Anchor anchor{Leg::Left, Vec2(0.0, geom.hip_spacing / 2.0)};
  std::vector<WorldSample> out;
  out.reserve(traj.samples.size());
  for (const JointPose& sample : traj.samples) {
    const GaitPhase& ph = phase_at(traj.phases, sample.t);
    // Hand the anchor to the stance foot before the old one lifts; at the
    // first swing sample both feet are still grounded, so the new anchor
    // position comes straight out of the old chain.
    if (ph.is_swing() && anchor.side != ph.stance_leg()) {
      const WorldPose bridge = world_pose(sample, geom, anchor);
      anchor.side = ph.stance_leg();
      anchor.ankle_xy = bridge.ankle(anchor.side).head<2>();
    }
    WorldSample ws;
    ws.t = sample.t;
    ws.pose = world_pose(sample, geom, anchor);
    ws.contact = contact_at(traj.phases, sample.t);
    ws.pose.left_foot.in_contact = ws.contact.left;
    ws.pose.right_foot.in_contact = ws.contact.right;
    out.push_back(std::move(ws));
  }
  return out;
}

StabilityReport check_trajectory(const Trajectory& traj,
                                 const RobotGeometry& geom, double threshold) {
  if (traj.samples.empty()) {
    throw InvalidParamsError("check_trajectory: no samples");
  }
  geom.validate();

  StabilityReport report;
  report.threshold = threshold;
  report.samples.reserve(traj.samples.size());
  report.min_margin = std::numeric_limits<double>::infinity();

  const std::vector<WorldSample> world = reconstruct_world(traj, geom);
  for (std::size_t i = 0; i < world.size(); ++i) {
    const WorldSample& ws = world[i];
    std::vector<Vec2> pts;
    for (Leg side : {Leg::Left, Leg::Right}) {
      const FootprintRect& foot = ws.pose.foot(side);
      if (!foot.in_contact) continue;
      pts.insert(pts.end(), foot.corners.begin(), foot.corners.end());
    }
    if (pts.empty()) {
      throw NoContactError("no supporting foot at sample " + std::to_string(i));
    }

    MarginSample ms;
    ms.t = ws.t;
    ms.com_xy = ws.pose.com_ground();
    ms.double_support = ws.contact.left && ws.contact.right;
    try {
      ms.polygon = convex_hull(pts);
    } catch (const DegeneratePolygonError& e) {
      throw DegeneratePolygonError(std::string(e.what()) + " at sample " +
                                   std::to_string(i));
    }
    ms.margin = signed_margin(ms.com_xy, ms.polygon);
    if (ms.margin < report.min_margin) {
      report.min_margin = ms.margin;
      report.min_margin_t = ms.t;
    }
    report.samples.push_back(std::move(ms));
  }
  report.pass = report.min_margin >= threshold;
  return report;
}

}  // namespace gaitkit
