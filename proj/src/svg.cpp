#include "gaitkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gaitkit/stability.hpp"

namespace gaitkit {

namespace {

constexpr double kScale = 1500.0;  // px per meter
constexpr double kPad = 24.0;      // px border

struct Mapper {
  double min_x, max_y;
  double sx(double x) const { return (x - min_x) * kScale + kPad; }
  double sy(double y) const { return (max_y - y) * kScale + kPad; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string polygon_points(const Mapper& m, const std::vector<Vec2>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += num(m.sx(pts[i].x())) + ',' + num(m.sy(pts[i].y()));
  }
  return s;
}

struct Placement {
  Leg side;
  std::array<Vec2, 4> corners;
};

}  // namespace

std::string render_walk_svg(const Trajectory& traj, const RobotGeometry& geom) {
  const std::vector<WorldSample> world = reconstruct_world(traj, geom);

  // A foot placement begins wherever a grounded ankle sits somewhere new.
  std::vector<Placement> placements;
  Vec2 last_xy[2] = {Vec2(1e18, 1e18), Vec2(1e18, 1e18)};
  for (const WorldSample& ws : world) {
    for (Leg side : {Leg::Left, Leg::Right}) {
      const int i = side == Leg::Left ? 0 : 1;
      if (!ws.pose.foot(side).in_contact) continue;
      const Vec2 xy = ws.pose.ankle(side).head<2>();
      if ((xy - last_xy[i]).norm() > 1e-9) {
        placements.push_back({side, ws.pose.foot(side).corners});
        last_xy[i] = xy;
      }
    }
  }

  // Support polygon snapshots at each phase boundary plus the final sample.
  std::vector<std::vector<Vec2>> polygons;
  auto hull_at = [&](std::size_t k) {
    std::vector<Vec2> pts;
    for (Leg side : {Leg::Left, Leg::Right}) {
      const FootprintRect& foot = world[k].pose.foot(side);
      if (!foot.in_contact) continue;
      pts.insert(pts.end(), foot.corners.begin(), foot.corners.end());
    }
    polygons.push_back(convex_hull(std::move(pts)).vertices);
  };
  for (const GaitPhase& ph : traj.phases) {
    const std::size_t k = static_cast<std::size_t>(
        std::lround(ph.start * traj.sample_rate));
    if (k < world.size()) hull_at(k);
  }
  if (!world.empty()) hull_at(world.size() - 1);

  std::vector<Vec2> com_path;
  com_path.reserve(world.size());
  for (const WorldSample& ws : world) com_path.push_back(ws.pose.com_ground());

  double min_x = 1e18, max_x = -1e18, min_y = 1e18, max_y = -1e18;
  auto grow = [&](const Vec2& p) {
    min_x = std::min(min_x, p.x());
    max_x = std::max(max_x, p.x());
    min_y = std::min(min_y, p.y());
    max_y = std::max(max_y, p.y());
  };
  for (const Placement& pl : placements)
    for (const Vec2& c : pl.corners) grow(c);
  for (const Vec2& p : com_path) grow(p);

  const Mapper m{min_x, max_y};
  const double width = (max_x - min_x) * kScale + 2.0 * kPad;
  const double height = (max_y - min_y) * kScale + 2.0 * kPad;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
         num(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#fdfdf8\"/>\n";

  for (const Placement& pl : placements) {
    const bool left = pl.side == Leg::Left;
    svg += "<polygon points=\"";
    svg += polygon_points(m, {pl.corners.begin(), pl.corners.end()});
    svg += left ? "\" fill=\"#dbe7f3\" stroke=\"#3a6ea5\""
                : "\" fill=\"#f3e0de\" stroke=\"#a3403a\"";
    svg += " stroke-width=\"1.5\" fill-opacity=\"0.55\"/>\n";
  }

  for (const std::vector<Vec2>& poly : polygons) {
    svg += "<polygon points=\"" + polygon_points(m, poly) +
           "\" fill=\"none\" stroke=\"#4a9a55\" stroke-width=\"1\" "
           "stroke-dasharray=\"5 4\"/>\n";
  }

  svg += "<polyline points=\"" + polygon_points(m, com_path) +
         "\" fill=\"none\" stroke=\"#d9941f\" stroke-width=\"2\"/>\n";
  if (!com_path.empty()) {
    svg += "<circle cx=\"" + num(m.sx(com_path.front().x())) + "\" cy=\"" +
           num(m.sy(com_path.front().y())) +
           "\" r=\"4\" fill=\"#d9941f\"/>\n";
    svg += "<circle cx=\"" + num(m.sx(com_path.back().x())) + "\" cy=\"" +
           num(m.sy(com_path.back().y())) +
           "\" r=\"4\" fill=\"none\" stroke=\"#d9941f\" stroke-width=\"2\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace gaitkit
