// Copyright 2026 The uavlos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "uavlos/geometry.hpp"

namespace uavlos {
namespace detail {

// Distance along the ray origin + t*dir to the supporting line of segment s,
// or +inf when the ray is parallel to it.
inline double ray_line_param(Point2 origin, Point2 dir, const Segment2& s) {
  const Point2 e = s.b - s.a;
  const double den = cross(dir, e);
  if (std::abs(den) < 1e-300) return std::numeric_limits<double>::infinity();
  return cross(s.a - origin, e) / den;
}

// Hit parameter of the ray against the closed segment, +inf on a miss.
inline double ray_segment_param(Point2 origin, Point2 dir, const Segment2& s) {
  const Point2 e = s.b - s.a;
  const double den = cross(dir, e);
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  const double t = cross(s.a - origin, e) / den;
  const double u = cross(s.a - origin, dir) / den;
  if (t <= 0.0 || u < 0.0 || u > 1.0) return std::numeric_limits<double>::infinity();
  return t;
}

inline double angle_of(Point2 origin, Point2 p) {
  double a = std::atan2(p.y - origin.y, p.x - origin.x);
  if (a < 0) a += 2.0 * std::numbers::pi;
  return a;
}

}  // namespace detail

// Region of `outer` seen from `origin` when every ring of `obstacles` (and
// every hole of `outer`) is an opaque wall.
//
// Angular sweep: the event angles are all wall endpoints and all pairwise
// wall crossings, so between two consecutive events the nearest wall along
// the ray is fixed. One ray per interval finds it and the interval's boundary
// piece is that wall clipped to the two event rays.
inline Polygon visibility_polygon(Point2 origin, const Polygon& outer,
                                  std::span<const Polygon> obstacles) {
  if (point_in_polygon(origin, outer) != Location::inside)
    throw DegenerateInput("visibility_polygon: origin not strictly inside outer polygon");
  for (const auto& ob : obstacles)
    if (point_in_polygon(origin, ob) != Location::outside)
      throw OriginOccluded("visibility_polygon: origin inside an obstacle");

  const Box outer_box = bounding_box(outer);
  std::vector<Segment2> walls;
  for_each_edge(outer, [&](Point2 a, Point2 b) {
    if (a != b) walls.push_back({a, b});
  });
  const std::size_t n_outer = walls.size();
  for (const auto& ob : obstacles) {
    if (!bounding_box(ob).overlaps(outer_box, kEpsGeom)) continue;
    for_each_edge(ob, [&](Point2 a, Point2 b) {
      if (a == b) return;
      Box eb;
      eb.expand(a);
      eb.expand(b);
      if (eb.overlaps(outer_box, kEpsGeom)) walls.push_back({a, b});
    });
  }
  if (walls.size() == n_outer && outer.holes.empty()) {
    Polygon out{outer.outer, {}};
    normalize_orientation(out);
    return out;
  }

  std::vector<double> events;
  events.reserve(walls.size() * 4);
  for (const auto& w : walls) {
    events.push_back(detail::angle_of(origin, w.a));
    events.push_back(detail::angle_of(origin, w.b));
  }
  for (std::size_t i = 0; i < walls.size(); ++i) {
    Box bi;
    bi.expand(walls[i].a);
    bi.expand(walls[i].b);
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      if (i < n_outer && j < n_outer) continue;  // outer ring does not self-cross
      Box bj;
      bj.expand(walls[j].a);
      bj.expand(walls[j].b);
      if (!bi.overlaps(bj)) continue;
      const Point2 d1 = walls[i].b - walls[i].a, d2 = walls[j].b - walls[j].a;
      const double den = cross(d1, d2);
      if (den == 0.0) continue;
      const double t = cross(walls[j].a - walls[i].a, d2) / den;
      const double u = cross(walls[j].a - walls[i].a, d1) / den;
      if (t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0)
        events.push_back(detail::angle_of(origin, walls[i].a + d1 * t));
    }
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end(),
                           [](double a, double b) { return b - a < 1e-13; }),
               events.end());
  if (events.size() > 1 && events.back() + 1e-13 >= events.front() + 2.0 * std::numbers::pi)
    events.pop_back();

  Ring pts;
  auto push = [&](Point2 p) {
    if (pts.empty() || distance(pts.back(), p) > kEpsGeom) pts.push_back(p);
  };
  const std::size_t m = events.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double a0 = events[i];
    const double a1 = (i + 1 < m) ? events[i + 1] : events[0] + 2.0 * std::numbers::pi;
    const double mid = 0.5 * (a0 + a1);
    const Point2 dir{std::cos(mid), std::sin(mid)};
    double best_t = std::numeric_limits<double>::infinity();
    const Segment2* best = nullptr;
    for (const auto& w : walls) {
      const double t = detail::ray_segment_param(origin, dir, w);
      if (t < best_t) {
        best_t = t;
        best = &w;
      }
    }
    if (best == nullptr) continue;
    for (double ang : {a0, a1}) {
      const Point2 d{std::cos(ang), std::sin(ang)};
      double t = detail::ray_line_param(origin, d, *best);
      Point2 p = origin + d * t;
      // Clamp numerically grazing rays to the wall's nearest endpoint.
      if (!std::isfinite(t) || t <= 0.0 || point_segment_distance(p, *best) > 1e-7) {
        const double ea = std::abs(std::remainder(detail::angle_of(origin, best->a) - ang, 2.0 * std::numbers::pi));
        const double eb = std::abs(std::remainder(detail::angle_of(origin, best->b) - ang, 2.0 * std::numbers::pi));
        p = ea < eb ? best->a : best->b;
      }
      push(p);
    }
  }
  while (pts.size() > 1 && distance(pts.front(), pts.back()) <= kEpsGeom) pts.pop_back();

  // Drop collinear runs along walls.
  Ring clean;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point2 p = pts[(i + pts.size() - 1) % pts.size()], c = pts[i], q = pts[(i + 1) % pts.size()];
    if (std::abs(orient(p, c, q)) <= kEpsGeom * distance(p, q) && dot(c - p, q - c) > 0) continue;
    clean.push_back(c);
  }
  if (clean.size() < 3) throw DegenerateInput("visibility_polygon: empty visible region");
  return Polygon{std::move(clean), {}};
}

}  // namespace uavlos
