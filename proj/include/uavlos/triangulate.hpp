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

// Ear-clipping triangulation. Holes are first bridged into the outer ring by
// zero-width cuts to a mutually visible vertex.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "uavlos/geometry.hpp"

namespace uavlos {
namespace detail {

inline bool segments_cross_open(Point2 a, Point2 b, Point2 c, Point2 d) {
  // Shared endpoints do not count.
  if (a == c || a == d || b == c || b == d) return false;
  const double d1 = orient(c, d, a), d2 = orient(c, d, b);
  const double d3 = orient(a, b, c), d4 = orient(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  // Touching in the interior of a-b also blocks a bridge.
  auto on = [](Point2 p, Point2 q, Point2 r) {
    return point_segment_distance(r, {p, q}) <= kEpsGeom;
  };
  return on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b);
}

// True when direction d leaves vertex ring[i] into the polygon interior
// (ring counter-clockwise, interior on the left).
inline bool in_vertex_wedge(const Ring& ring, std::size_t i, Point2 d) {
  const std::size_t n = ring.size();
  const Point2 v = ring[i];
  const Point2 to_next = ring[(i + 1) % n] - v;
  const Point2 to_prev = ring[(i + n - 1) % n] - v;
  auto ccw_angle = [](Point2 from, Point2 to) {
    double a = std::atan2(cross(from, to), dot(from, to));
    if (a < 0) a += 2.0 * std::numbers::pi;
    return a;
  };
  const double wedge = ccw_angle(to_next, to_prev);
  const double ang = ccw_angle(to_next, d);
  return ang > 0.0 && ang < wedge;
}

inline Ring bridge_holes(const Polygon& poly) {
  Ring ring = poly.outer;
  if (signed_area(ring) < 0) std::reverse(ring.begin(), ring.end());
  std::vector<Ring> holes;
  for (const auto& h : poly.holes) {
    if (h.size() < 3) continue;
    Ring r = h;
    if (signed_area(r) > 0) std::reverse(r.begin(), r.end());
    holes.push_back(std::move(r));
  }
  // Rightmost holes first keeps bridges short and non-overlapping.
  auto max_x = [](const Ring& r) {
    return std::max_element(r.begin(), r.end(), [](Point2 a, Point2 b) { return a.x < b.x; })->x;
  };
  std::sort(holes.begin(), holes.end(), [&](const Ring& a, const Ring& b) { return max_x(a) > max_x(b); });

  for (std::size_t hi = 0; hi < holes.size(); ++hi) {
    const Ring& hole = holes[hi];
    auto blocked = [&](Point2 a, Point2 b) {
      auto ring_hit = [&](const Ring& r) {
        for (std::size_t i = 0, j = r.size() - 1; i < r.size(); j = i++)
          if (segments_cross_open(a, b, r[j], r[i])) return true;
        return false;
      };
      if (ring_hit(ring)) return true;
      for (std::size_t k = hi; k < holes.size(); ++k)
        if (ring_hit(holes[k])) return true;
      return false;
    };

    // Try hole vertices from the rightmost, ring vertices by distance.
    std::vector<std::size_t> hv(hole.size());
    std::iota(hv.begin(), hv.end(), 0);
    std::sort(hv.begin(), hv.end(), [&](std::size_t a, std::size_t b) { return hole[a].x > hole[b].x; });
    bool done = false;
    for (std::size_t hidx : hv) {
      const Point2 m = hole[hidx];
      std::vector<std::size_t> rv(ring.size());
      std::iota(rv.begin(), rv.end(), 0);
      std::sort(rv.begin(), rv.end(), [&](std::size_t a, std::size_t b) {
        return distance(ring[a], m) < distance(ring[b], m);
      });
      for (std::size_t ridx : rv) {
        const Point2 v = ring[ridx];
        if (v == m || !in_vertex_wedge(ring, ridx, m - v)) continue;
        // The cut must leave the hole into the polygon body, which lies on
        // the left of the clockwise hole ring.
        if (!in_vertex_wedge(hole, hidx, v - m)) continue;
        if (blocked(m, v)) continue;
        Ring merged;
        merged.reserve(ring.size() + hole.size() + 2);
        merged.insert(merged.end(), ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(ridx) + 1);
        for (std::size_t k = 0; k <= hole.size(); ++k) merged.push_back(hole[(hidx + k) % hole.size()]);
        merged.insert(merged.end(), ring.begin() + static_cast<std::ptrdiff_t>(ridx), ring.end());
        ring = std::move(merged);
        done = true;
        break;
      }
      if (done) break;
    }
    if (!done) throw DegenerateInput("triangulate: could not bridge hole");
  }
  return ring;
}

inline bool point_in_triangle_closed(Point2 p, Point2 a, Point2 b, Point2 c) {
  return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
}

}  // namespace detail

// Triangles are counter-clockwise and their areas sum to polygon_area(p).
inline std::vector<Triangle> triangulate(const Polygon& p) {
  if (polygon_area(p) <= 0.0) throw DegenerateInput("triangulate: zero-area polygon");
  Ring ring = detail::bridge_holes(p);

  std::vector<Triangle> tris;
  std::vector<std::size_t> idx(ring.size());
  std::iota(idx.begin(), idx.end(), 0);
  tris.reserve(ring.size());

  auto is_ear = [&](std::size_t k) {
    const std::size_t n = idx.size();
    const Point2 a = ring[idx[(k + n - 1) % n]], b = ring[idx[k]], c = ring[idx[(k + 1) % n]];
    if (orient(a, b, c) <= 0) return false;
    const Point2 tri[3] = {a, b, c};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k || j == (k + 1) % n || j == (k + n - 1) % n) continue;
      const Point2 q = ring[idx[j]];
      int at = -1;
      for (int t = 0; t < 3; ++t)
        if (q == tri[t]) at = t;
      if (at < 0) {
        if (detail::point_in_triangle_closed(q, a, b, c)) return false;
        continue;
      }
      // A bridge duplicate of a corner: its edges must not enter the ear.
      const Point2 u = tri[(at + 1) % 3] - q, w = tri[(at + 2) % 3] - q;
      for (Point2 nb : {ring[idx[(j + 1) % n]], ring[idx[(j + n - 1) % n]]}) {
        const Point2 d = nb - q;
        if (cross(u, d) > 0 && cross(d, w) > 0) return false;
      }
    }
    return true;
  };

  std::size_t guard = 0;
  while (idx.size() > 3) {
    const std::size_t n = idx.size();
    bool clipped = false;
    for (std::size_t k = 0; k < n; ++k) {
      const Point2 a = ring[idx[(k + n - 1) % n]], b = ring[idx[k]], c = ring[idx[(k + 1) % n]];
      const double o = orient(a, b, c);
      // Zero-area vertices (collinear runs, bridge spikes) go without a triangle.
      if (std::abs(o) <= kEpsGeom * kEpsGeom && (a == c || dot(b - a, c - b) >= 0)) {
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
        clipped = true;
        break;
      }
      if (is_ear(k)) {
        tris.push_back({a, b, c});
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
        clipped = true;
        break;
      }
    }
    if (!clipped) {
      // Numerical stalemate: clip the most convex vertex.
      std::size_t best = 0;
      double best_o = -std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < n; ++k) {
        const double o = orient(ring[idx[(k + n - 1) % n]], ring[idx[k]], ring[idx[(k + 1) % n]]);
        if (o > best_o) {
          best_o = o;
          best = k;
        }
      }
      tris.push_back({ring[idx[(best + n - 1) % n]], ring[idx[best]], ring[idx[(best + 1) % n]]});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(best));
    }
    if (++guard > 4 * ring.size() + 16) break;
  }
  if (idx.size() == 3) {
    const Triangle t{ring[idx[0]], ring[idx[1]], ring[idx[2]]};
    if (std::abs(triangle_area(t)) > 0.0) tris.push_back(t);
  }
  return tris;
}

}  // namespace uavlos
