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

// Basic 2D/3D geometric types and kernels: areas, point location, distances,
// convex hulls, regular polygons and the segment/cuboid occlusion test.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "uavlos/error.hpp"

namespace uavlos {

// Tolerance band used by every boundary classification, in meters.
inline constexpr double kEpsGeom = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {a.x * s, a.y * s}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

// Ground-referenced 3D point; h is height above ground.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double h = 0.0;

  constexpr Point2 ground() const { return {x, y}; }
  friend constexpr bool operator==(Point3, Point3) = default;
};

struct Segment2 {
  Point2 a;
  Point2 b;
};

struct Triangle {
  Point2 a;
  Point2 b;
  Point2 c;
};

using Ring = std::vector<Point2>;

// Outer ring counter-clockwise, holes clockwise.
struct Polygon {
  Ring outer;
  std::vector<Ring> holes;

  friend bool operator==(const Polygon&, const Polygon&) = default;
};

// Building block: footprint rectangle len x wid centred at (cx, cy) and
// rotated by yaw, extruded from the ground to `height`.
struct Cuboid {
  double cx = 0.0;
  double cy = 0.0;
  double len = 0.0;
  double wid = 0.0;
  double height = 0.0;
  double yaw = 0.0;

  // Footprint corners, counter-clockwise.
  std::array<Point2, 4> footprint() const {
    const double c = std::cos(yaw), s = std::sin(yaw);
    const double hl = 0.5 * len, hw = 0.5 * wid;
    std::array<Point2, 4> out;
    const double lx[4] = {-hl, hl, hl, -hl};
    const double ly[4] = {-hw, -hw, hw, hw};
    for (int i = 0; i < 4; ++i)
      out[i] = {cx + c * lx[i] - s * ly[i], cy + s * lx[i] + c * ly[i]};
    return out;
  }

  // Radius of the footprint's circumscribed circle.
  double half_diagonal() const { return 0.5 * std::hypot(len, wid); }

  friend bool operator==(const Cuboid&, const Cuboid&) = default;
};

struct Box {
  Point2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

  void expand(Point2 p) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  bool empty() const { return lo.x > hi.x; }
  bool overlaps(const Box& o, double pad = 0.0) const {
    return !(o.lo.x > hi.x + pad || o.hi.x < lo.x - pad || o.lo.y > hi.y + pad ||
             o.hi.y < lo.y - pad);
  }
  bool contains(Point2 p, double pad = 0.0) const {
    return p.x >= lo.x - pad && p.x <= hi.x + pad && p.y >= lo.y - pad && p.y <= hi.y + pad;
  }
  // Euclidean distance from p to the box (0 inside).
  double distance(Point2 p) const {
    const double dx = std::max({lo.x - p.x, 0.0, p.x - hi.x});
    const double dy = std::max({lo.y - p.y, 0.0, p.y - hi.y});
    return std::hypot(dx, dy);
  }
};

inline constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
// Twice the signed area of triangle (o, a, b); positive when counter-clockwise.
inline constexpr double orient(Point2 o, Point2 a, Point2 b) { return cross(a - o, b - o); }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline double distance(Point3 a, Point3 b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                   (a.h - b.h) * (a.h - b.h));
}

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Shoelace formula; positive for counter-clockwise rings.
inline double signed_area(std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) acc += cross(ring[j], ring[i]);
  return 0.5 * acc;
}

inline double triangle_area(const Triangle& t) { return 0.5 * orient(t.a, t.b, t.c); }
inline Point2 centroid(const Triangle& t) {
  return {(t.a.x + t.b.x + t.c.x) / 3.0, (t.a.y + t.b.y + t.c.y) / 3.0};
}

// Area of the outer ring minus the holes, independent of ring orientation.
inline double polygon_area(const Polygon& p) {
  double a = std::abs(signed_area(p.outer));
  for (const auto& h : p.holes) a -= std::abs(signed_area(h));
  return std::max(a, 0.0);
}

inline double total_area(std::span<const Polygon> polys) {
  double a = 0.0;
  for (const auto& p : polys) a += polygon_area(p);
  return a;
}

// Reorients rings in place: outer counter-clockwise, holes clockwise.
inline void normalize_orientation(Polygon& p) {
  if (signed_area(p.outer) < 0) std::reverse(p.outer.begin(), p.outer.end());
  for (auto& h : p.holes)
    if (signed_area(h) > 0) std::reverse(h.begin(), h.end());
}

inline Box bounding_box(std::span<const Point2> pts) {
  Box b;
  for (auto p : pts) b.expand(p);
  return b;
}
inline Box bounding_box(const Polygon& p) { return bounding_box(p.outer); }

// Calls f(a, b) for every directed edge of every ring of p.
template <typename F>
void for_each_edge(const Polygon& p, F&& f) {
  auto ring_edges = [&](const Ring& r) {
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) f(r[i], r[(i + 1) % n]);
  };
  ring_edges(p.outer);
  for (const auto& h : p.holes) ring_edges(h);
}

inline double point_segment_distance(Point2 q, const Segment2& s) {
  const Point2 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(q, s.a);
  const double t = std::clamp(dot(q - s.a, d) / len2, 0.0, 1.0);
  return distance(q, s.a + d * t);
}

enum class Location { inside, boundary, outside };

// Even-odd classification against one ring, with a boundary band of kEpsGeom.
inline Location point_in_ring(Point2 q, std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  bool in = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = ring[j], b = ring[i];
    if (point_segment_distance(q, {a, b}) <= kEpsGeom) return Location::boundary;
    if ((a.y > q.y) != (b.y > q.y)) {
      const double x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (q.x < x) in = !in;
    }
  }
  return in ? Location::inside : Location::outside;
}

inline Location point_in_polygon(Point2 q, const Polygon& p) {
  const Location lo = point_in_ring(q, p.outer);
  if (lo != Location::inside) return lo;
  for (const auto& h : p.holes) {
    const Location lh = point_in_ring(q, h);
    if (lh == Location::boundary) return Location::boundary;
    if (lh == Location::inside) return Location::outside;
  }
  return Location::inside;
}

// Minimum distance from q to any edge of any ring of p.
inline double distance_to_boundary(Point2 q, const Polygon& p) {
  double best = std::numeric_limits<double>::infinity();
  for_each_edge(p, [&](Point2 a, Point2 b) { best = std::min(best, point_segment_distance(q, {a, b})); });
  return best;
}

// Andrew's monotone chain. Collinear boundary points are dropped, so the
// result has only strictly convex vertices, all taken from the input.
inline Polygon convex_hull(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DegenerateInput("convex_hull: fewer than 3 distinct points");

  const std::size_t n = pts.size();
  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3 || std::abs(signed_area(hull)) <= kEpsGeom * kEpsGeom)
    throw DegenerateInput("convex_hull: input points are collinear");
  return Polygon{std::move(hull), {}};
}

// Regular n-gon inscribed in the circle, counter-clockwise, first vertex at
// angle 0.
inline Polygon circle_polygon(Point2 center, double radius, int n_seg) {
  if (!(radius > 0.0)) throw InvalidParams("circle_polygon: radius must be positive");
  if (n_seg < 3) throw InvalidParams("circle_polygon: need at least 3 segments");
  Ring r;
  r.reserve(n_seg);
  for (int i = 0; i < n_seg; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n_seg;
    r.push_back({center.x + radius * std::cos(t), center.y + radius * std::sin(t)});
  }
  return Polygon{std::move(r), {}};
}

// True iff the segment a-b (excluding its endpoints) meets the closed cuboid.
// Liang-Barsky clipping in the cuboid's local frame.
inline bool segment_blocked_3d(const Point3& a, const Point3& b, const Cuboid& c) {
  const double cs = std::cos(c.yaw), sn = std::sin(c.yaw);
  auto local = [&](const Point3& p) {
    const double dx = p.x - c.cx, dy = p.y - c.cy;
    return std::array<double, 3>{cs * dx + sn * dy, -sn * dx + cs * dy, p.h};
  };
  const auto p0 = local(a), p1 = local(b);
  const double lo[3] = {-0.5 * c.len, -0.5 * c.wid, 0.0};
  const double hi[3] = {0.5 * c.len, 0.5 * c.wid, c.height};
  double t0 = 0.0, t1 = 1.0;
  for (int ax = 0; ax < 3; ++ax) {
    const double d = p1[ax] - p0[ax];
    if (d == 0.0) {
      if (p0[ax] < lo[ax] || p0[ax] > hi[ax]) return false;
      continue;
    }
    double ta = (lo[ax] - p0[ax]) / d, tb = (hi[ax] - p0[ax]) / d;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 > t1) return false;
  }
  return t1 > 0.0 && t0 < 1.0;
}

// Sutherland-Hodgman clip of `subject` by a convex counter-clockwise ring.
// Returns an empty ring when nothing survives.
inline Ring clip_convex(const Ring& subject, std::span<const Point2> clip) {
  Ring out = subject;
  const std::size_t m = clip.size();
  for (std::size_t e = 0; e < m && !out.empty(); ++e) {
    const Point2 a = clip[e], b = clip[(e + 1) % m];
    Ring in = std::move(out);
    out.clear();
    const std::size_t n = in.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 p = in[i], q = in[(i + 1) % n];
      const double sp = orient(a, b, p), sq = orient(a, b, q);
      if (sp >= 0) out.push_back(p);
      if ((sp >= 0) != (sq >= 0)) {
        const double t = sp / (sp - sq);
        out.push_back(p + (q - p) * t);
      }
    }
  }
  // Drop repeated points created by vertices lying on clip edges.
  Ring clean;
  for (auto p : out)
    if (clean.empty() || distance(clean.back(), p) > kEpsGeom) clean.push_back(p);
  while (clean.size() > 1 && distance(clean.front(), clean.back()) <= kEpsGeom) clean.pop_back();
  if (clean.size() < 3 || std::abs(signed_area(clean)) <= kEpsGeom) return {};
  return clean;
}

inline Ring rectangle_ring(Point2 lo, Point2 hi) {
  return {{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}};
}

}  // namespace uavlos
