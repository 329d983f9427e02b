#pragma once

// Independent reference implementations used to cross-check the library.
// Deliberately naive: different algorithms, shared results.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "gaitkit/stability.hpp"

namespace oracles {

using gaitkit::Vec2;

inline double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// O(n^3) hull: an ordered pair (i, j) is a hull edge iff every other point
// lies strictly to its left. Requires general position (no duplicates, no
// three collinear), which the random test inputs satisfy almost surely.
inline std::vector<Vec2> brute_force_hull(const std::vector<Vec2>& pts) {
  const std::size_t n = pts.size();
  std::vector<int> next(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool all_left = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (cross(pts[i], pts[j], pts[k]) <= 0.0) {
          all_left = false;
          break;
        }
      }
      if (all_left) {
        if (next[i] != -1) throw std::runtime_error("degenerate hull input");
        next[i] = static_cast<int>(j);
      }
    }
  }
  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (pts[i].x() < pts[start].x() ||
        (pts[i].x() == pts[start].x() && pts[i].y() < pts[start].y())) {
      start = i;
    }
  }
  std::vector<Vec2> hull;
  int cur = static_cast<int>(start);
  do {
    if (cur < 0 || hull.size() > n) throw std::runtime_error("broken hull chain");
    hull.push_back(pts[static_cast<std::size_t>(cur)]);
    cur = next[static_cast<std::size_t>(cur)];
  } while (cur != static_cast<int>(start));
  return hull;
}

// Even-odd ray cast, +x direction.
inline bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& poly) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[j];
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double x_cross = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
      if (p.x() < x_cross) inside = !inside;
    }
  }
  return inside;
}

// Boundary distance by per-edge ternary search (the squared distance along a
// segment is quadratic, hence unimodal). No projection formula shared with
// the implementation.
inline double margin_by_boundary_search(const Vec2& p,
                                        const std::vector<Vec2>& poly) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      const double d1 = (p - (a + m1 * (b - a))).squaredNorm();
      const double d2 = (p - (a + m2 * (b - a))).squaredNorm();
      if (d1 < d2) hi = m2; else lo = m1;
    }
    const double mid = (lo + hi) / 2.0;
    best = std::min(best, (p - (a + mid * (b - a))).norm());
  }
  return point_in_polygon(p, poly) ? best : -best;
}

// Convex polygon with vertices on a random-radius fan around a center.
inline std::vector<Vec2> random_convex_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_dist(3, 9);
  std::uniform_real_distribution<double> r_dist(0.2, 1.5);
  std::uniform_real_distribution<double> c_dist(-2.0, 2.0);
  const int n = n_dist(rng);
  std::vector<double> angles(n);
  std::uniform_real_distribution<double> a_dist(0.0, 2.0 * M_PI);
  for (double& a : angles) a = a_dist(rng);
  std::sort(angles.begin(), angles.end());
  const Vec2 c(c_dist(rng), c_dist(rng));
  // A common radius keeps the fan convex regardless of angle spacing.
  const double r = r_dist(rng);
  std::vector<Vec2> poly;
  poly.reserve(n);
  for (double a : angles) {
    poly.emplace_back(c.x() + r * std::cos(a), c.y() + r * std::sin(a));
  }
  return poly;
}

}  // namespace oracles
