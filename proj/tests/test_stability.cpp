#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "gaitkit/errors.hpp"
#include "gaitkit/stability.hpp"
#include "oracles.hpp"

using namespace gaitkit;

namespace {
const RobotGeometry kGeom;
const GaitParams kDefaults;

JointPose crouch_pose(double sway) {
  const double crouch = kDefaults.crouch_for(kGeom);
  const SagittalIk ik = ik_sagittal({0.0, crouch}, kGeom);
  const SwayAngles roll = lateral_sway_angles(sway);
  JointPose pose;
  for (LegAngles* leg : {&pose.left, &pose.right}) {
    *leg = {roll.hip_roll, ik.hip_pitch, ik.knee_pitch,
            ankle_pitch_flat(ik.hip_pitch, ik.knee_pitch), roll.ankle_roll};
  }
  return pose;
}
}

TEST_CASE("convex hull of a rectangle is the rectangle") {
  std::vector<Vec2> pts = {{0, 0}, {2, 0}, {2, 1}, {0, 1}};
  const SupportPolygon hull = convex_hull(pts);
  REQUIRE(hull.vertices.size() == 4);
  CHECK(hull.vertices[0].x() == 0.0); CHECK(hull.vertices[0].y() == 0.0);
  CHECK(hull.vertices[1].x() == 2.0); CHECK(hull.vertices[1].y() == 0.0);
  CHECK(hull.vertices[2].x() == 2.0); CHECK(hull.vertices[2].y() == 1.0);
  CHECK(hull.vertices[3].x() == 0.0); CHECK(hull.vertices[3].y() == 1.0);
}

TEST_CASE("hull of two separated rectangles spans the gap") {
  std::vector<Vec2> pts;
  for (double x : {0.0, 0.14}) {
    for (double y : {0.0, 0.06}) {
      pts.emplace_back(x, y);          // left foot
      pts.emplace_back(x, y - 0.14);   // right foot, gap between
    }
  }
  const SupportPolygon hull = convex_hull(pts);
  CHECK(hull.vertices.size() >= 4);
  CHECK(hull.vertices.size() <= 8);
  // The gap's midpoint is inside the union hull.
  CHECK(signed_margin(Vec2(0.07, -0.04), hull) > 0.0);
}

TEST_CASE("hull rejects degenerate inputs") {
  CHECK_THROWS_AS(convex_hull({{0, 0}, {1, 1}}), DegeneratePolygonError);
  CHECK_THROWS_AS(convex_hull({{0, 0}, {1, 1}, {2, 2}, {3, 3}}),
                  DegeneratePolygonError);
  CHECK_THROWS_AS(convex_hull({{1, 1}, {1, 1}, {1, 1}}), DegeneratePolygonError);
}

TEST_CASE("hull is idempotent and matches brute force") {
  std::mt19937_64 rng(607);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> n_dist(3, 12);
    std::vector<Vec2> pts(n_dist(rng));
    for (Vec2& p : pts) p = Vec2(coord(rng), coord(rng));

    SupportPolygon hull;
    std::vector<Vec2> brute;
    try {
      hull = convex_hull(pts);
      brute = oracles::brute_force_hull(pts);
    } catch (const DegeneratePolygonError&) {
      continue;  // collinear draw; astronomically rare
    }
    REQUIRE(hull.vertices.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) {
      CHECK(hull.vertices[i].x() == brute[i].x());
      CHECK(hull.vertices[i].y() == brute[i].y());
    }

    const SupportPolygon again = convex_hull(hull.vertices);
    REQUIRE(again.vertices.size() == hull.vertices.size());
    for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
      CHECK(again.vertices[i].x() == hull.vertices[i].x());
      CHECK(again.vertices[i].y() == hull.vertices[i].y());
    }
  }
}

TEST_CASE("signed margin on the unit square") {
  const SupportPolygon square = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(signed_margin(Vec2(0.5, 0.5), square) == doctest::Approx(0.5));
  CHECK(signed_margin(Vec2(2.0, 0.5), square) == doctest::Approx(-1.0));
  CHECK(signed_margin(Vec2(1.0, 0.5), square) == 0.0);
  CHECK(signed_margin(Vec2(0.25, 0.5), square) == doctest::Approx(0.25));
}

TEST_CASE("signed margin agrees with the boundary-search oracle") {
  std::mt19937_64 rng(90210);
  std::uniform_real_distribution<double> coord(-4.0, 4.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::vector<Vec2> poly = oracles::random_convex_polygon(rng);
    const Vec2 p(coord(rng), coord(rng));
    const double got = signed_margin(p, SupportPolygon{poly});
    const double want = oracles::margin_by_boundary_search(p, poly);
    CHECK(std::abs(got - want) < 1e-6);
  }
}

TEST_CASE("margin respects translation and containment monotonicity") {
  std::mt19937_64 rng(1111);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<Vec2> poly = oracles::random_convex_polygon(rng);
    const Vec2 p(coord(rng), coord(rng));
    const Vec2 shift(coord(rng) * 10.0, coord(rng) * 10.0);
    std::vector<Vec2> moved = poly;
    for (Vec2& v : moved) v += shift;
    const double a = signed_margin(p, SupportPolygon{poly});
    const double b = signed_margin(p + shift, SupportPolygon{moved});
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
  }

  // Double-support hull contains each single footprint, so its margin can
  // only be larger.
  std::vector<Vec2> left = {{0.0, 0.01}, {0.14, 0.01}, {0.14, 0.07}, {0.0, 0.07}};
  std::vector<Vec2> right = {{0.0, -0.07}, {0.14, -0.07}, {0.14, -0.01}, {0.0, -0.01}};
  std::vector<Vec2> both = left;
  both.insert(both.end(), right.begin(), right.end());
  const SupportPolygon hull_l = convex_hull(left);
  const SupportPolygon hull_b = convex_hull(both);
  for (double y : {-0.05, 0.0, 0.04}) {
    const Vec2 p(0.05, y);
    CHECK(signed_margin(p, hull_b) >= signed_margin(p, hull_l) - 1e-12);
  }
}

TEST_CASE("world pose of the symmetric crouch") {
  const Anchor anchor{Leg::Left, Vec2(0.0, kGeom.hip_spacing / 2.0)};
  const WorldPose wp = world_pose(crouch_pose(0.0), kGeom, anchor);

  CHECK(std::abs(wp.com.x()) < 1e-12);
  CHECK(std::abs(wp.com.y()) < 1e-12);
  CHECK(wp.pelvis_center.z() ==
        doctest::Approx(kGeom.ankle_height + kDefaults.crouch_for(kGeom)));
  CHECK(wp.com.z() == doctest::Approx(wp.pelvis_center.z() + kGeom.com_height_offset));

  // Feet mirror each other across the pelvis centerline.
  for (int i = 0; i < 4; ++i) {
    CHECK(wp.left_foot.corners[i].x() ==
          doctest::Approx(wp.right_foot.corners[3 - i].x()).epsilon(1e-12));
    CHECK(wp.left_foot.corners[i].y() ==
          doctest::Approx(-wp.right_foot.corners[3 - i].y()).epsilon(1e-12));
  }

  // Both soles rest on the ground.
  CHECK(wp.left_ankle.z() == doctest::Approx(kGeom.ankle_height));
  CHECK(wp.right_ankle.z() == doctest::Approx(kGeom.ankle_height).epsilon(1e-12));
}

TEST_CASE("sway moves the CoM by the frontal-plane law") {
  const Anchor anchor{Leg::Left, Vec2(0.0, kGeom.hip_spacing / 2.0)};
  const double theta = 0.15;
  const double riser = kDefaults.crouch_for(kGeom);  // stance ankle to hip

  const WorldPose rest = world_pose(crouch_pose(0.0), kGeom, anchor);
  const WorldPose leaned = world_pose(crouch_pose(theta), kGeom, anchor);

  // Lateral: the pelvis slides toward the right foot by riser*sin(theta).
  CHECK(rest.com.y() - leaned.com.y() ==
        doctest::Approx(riser * std::sin(theta)).epsilon(1e-12));
  // Vertical: it drops by riser*(1 - cos(theta)), and the drop is even in theta.
  CHECK(rest.pelvis_center.z() - leaned.pelvis_center.z() ==
        doctest::Approx(riser * (1.0 - std::cos(theta))).epsilon(1e-12));
  const WorldPose leaned_back = world_pose(crouch_pose(-theta), kGeom, anchor);
  CHECK(leaned_back.pelvis_center.z() == doctest::Approx(leaned.pelvis_center.z()));

  // The anchored corners do not move with the joints.
  for (int i = 0; i < 4; ++i) {
    CHECK(rest.left_foot.corners[i].x() ==
          doctest::Approx(leaned.left_foot.corners[i].x()).epsilon(1e-12));
    CHECK(rest.left_foot.corners[i].y() ==
          doctest::Approx(leaned.left_foot.corners[i].y()).epsilon(1e-12));
  }
}

TEST_CASE("contact schedule follows phase kinds") {
  const auto phases = plan_phases(kDefaults);
  const ContactState stand = contact_at(phases, 0.5);
  CHECK(stand.left);
  CHECK(stand.right);
  const ContactState half = contact_at(phases, 2.5);  // HalfStep(L)
  CHECK_FALSE(half.left);
  CHECK(half.right);
  const ContactState full = contact_at(phases, 4.5);  // FullStep(R)
  CHECK(full.left);
  CHECK_FALSE(full.right);
  CHECK_THROWS_AS(contact_at(phases, 1e9), NoContactError);
  CHECK_THROWS_AS(contact_at({}, 0.0), NoContactError);
}

TEST_CASE("swing foot keeps positive clearance in world frame") {
  const Trajectory traj = plan_walk(kDefaults, kGeom);
  const auto world = reconstruct_world(traj, kGeom);
  for (const WorldSample& ws : world) {
    for (Leg side : {Leg::Left, Leg::Right}) {
      const double sole_z = ws.pose.ankle(side).z() - kGeom.ankle_height;
      if (ws.pose.foot(side).in_contact) {
        CHECK(std::abs(sole_z) < 1e-9);
      } else {
        CHECK(sole_z > -1e-9);
      }
    }
  }
}

TEST_CASE("default walk passes, no-sway walk fails in first single support") {
  const Trajectory good = plan_walk(kDefaults, kGeom);
  const StabilityReport ok = check_trajectory(good, kGeom, 0.0);
  CHECK(ok.pass);
  CHECK(ok.min_margin >= 0.0);
  CHECK(ok.samples.size() == good.samples.size());

  GaitParams nosway = kDefaults;
  nosway.sway_angle = 0.0;
  const Trajectory bad = plan_walk(nosway, kGeom);
  const StabilityReport fail = check_trajectory(bad, kGeom, 0.0);
  CHECK_FALSE(fail.pass);
  // Earliest violation sits in the first single-support phase.
  double first_bad = -1.0;
  for (const MarginSample& s : fail.samples) {
    if (s.margin < 0.0) { first_bad = s.t; break; }
  }
  REQUIRE(first_bad >= 0.0);
  const GaitPhase& ph = phase_at(bad.phases, first_bad);
  CHECK(ph.kind == PhaseKind::HalfStep);
  CHECK(ph.leg == Leg::Left);
}

TEST_CASE("standing trajectory has a constant double-support margin") {
  GaitParams p = kDefaults;
  p.n_steps = 0;
  const Trajectory traj = plan_walk(p, kGeom);
  const StabilityReport report = check_trajectory(traj, kGeom, 0.0);
  CHECK(report.pass);
  for (const MarginSample& s : report.samples) {
    CHECK(s.double_support);
    CHECK(s.margin == report.samples.front().margin);
  }
}

TEST_CASE("check threshold is honored") {
  const Trajectory traj = plan_walk(kDefaults, kGeom);
  const StabilityReport strict = check_trajectory(traj, kGeom, 0.5);
  CHECK_FALSE(strict.pass);
  const StabilityReport loose = check_trajectory(traj, kGeom, 0.005);
  CHECK(loose.pass);
}
