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

// Exact geometric backend (SPA). Each building casts a convex ground shadow
// away from a UAV; the union of those shadows is exactly the set of ground
// points without LoS to it. Areas come from visibility polygons inside the
// mobility disk, radii from the nearest shadow edge.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "uavlos/boolean.hpp"
#include "uavlos/error.hpp"
#include "uavlos/geometry.hpp"
#include "uavlos/scene.hpp"
#include "uavlos/visibility.hpp"

namespace uavlos {

enum class Backend { analytic, shadow, grid };

inline const char* backend_name(Backend b) {
  switch (b) {
    case Backend::analytic: return "aa";
    case Backend::shadow: return "spa";
    case Backend::grid: return "da";
  }
  return "?";
}

struct LosReport {
  EntityId user_id = 0;
  EntityId uav_id = 0;
  double embb_area = 0.0;
  double urllc_radius = 0.0;
  Backend backend = Backend::shadow;
  double elapsed = 0.0;  // seconds
};

struct ShadowMap {
  EntityId uav_id = 0;
  Point3 uav_pos;
  std::vector<Polygon> shadows;  // pairwise disjoint
  std::vector<Box> boxes;        // bounding box per shadow
  std::size_t built_from = 0;
  Region region_clip;

  // Boundary points count as occluded.
  bool occluded(Point2 p) const {
    for (std::size_t i = 0; i < shadows.size(); ++i)
      if (boxes[i].contains(p, kEpsGeom) && point_in_polygon(p, shadows[i]) != Location::outside) return true;
    return false;
  }

  template <class F>
  void for_each_near(const Box& query, F&& f) const {
    for (std::size_t i = 0; i < shadows.size(); ++i)
      if (boxes[i].overlaps(query, kEpsGeom)) f(shadows[i]);
  }
};

namespace shadow {

inline Point2 project_vertex(Point3 v, Point3 uav) {
  if (v.h >= uav.h) throw VertexAboveUav("project_vertex: vertex not below the UAV");
  const double f = v.h / (v.h - uav.h);
  return {v.x - f * (v.x - uav.x), v.y - f * (v.y - uav.y)};
}

// Clip margin that keeps every mobility disk of the scene inside the map.
inline double default_margin(const Scene& s) {
  double m = s.mobility.v_max * s.dt;
  for (const auto& u : s.users) m = std::max(m, u.speed * s.dt);
  return m + 1.0;
}

// Shadow of one building, clipped to `clip`. Empty outer ring when nothing
// of it falls inside the clip box.
inline Polygon building_shadow(const Building& b, Point3 uav, const Box& clip) {
  const auto fp = b.footprint.footprint();
  const Ring clip_ring = rectangle_ring(clip.lo, clip.hi);
  std::vector<Point2> pts(fp.begin(), fp.end());
  if (b.footprint.height < uav.h) {
    for (auto c : fp) pts.push_back(project_vertex({c.x, c.y, b.footprint.height}, uav));
  } else {
    // At least as tall as the UAV: everything behind the footprint, within
    // the sector it subtends from the UAV's ground point, is occluded.
    const Point2 g = uav.ground();
    if (point_in_ring(g, fp) != Location::outside) return Polygon{clip_ring, {}};
    const double reach = 2.0 * (distance(clip.lo, clip.hi) + clip.distance(g)) + 1.0;
    for (auto c : fp) {
      const Point2 d = c - g;
      pts.push_back(c + d * (reach / norm(d)));
    }
  }
  Polygon hull = convex_hull(pts);
  return Polygon{clip_convex(hull.outer, clip_ring), {}};
}

inline Polygon building_shadow(const Building& b, Point3 uav) {
  const auto fp = b.footprint.footprint();
  const double big = 1e6 + std::abs(uav.x) + std::abs(uav.y);
  if (b.footprint.height >= uav.h) return building_shadow(b, uav, {{-big, -big}, {big, big}});
  std::vector<Point2> pts(fp.begin(), fp.end());
  for (auto c : fp) pts.push_back(project_vertex({c.x, c.y, b.footprint.height}, uav));
  return convex_hull(pts);
}

inline ShadowMap build_shadow_map(const Scene& s, const Uav& uav, double margin) {
  ShadowMap m;
  m.uav_id = uav.id;
  m.uav_pos = uav.pos;
  m.built_from = s.buildings.size();
  m.region_clip = {s.region.x_min - margin, s.region.x_max + margin, s.region.y_min - margin,
                   s.region.y_max + margin};
  const Box clip = s.region.box(margin);
  std::vector<Polygon> raw;
  raw.reserve(s.buildings.size());
  for (const auto& b : s.buildings) {
    Polygon p = building_shadow(b, uav.pos, clip);
    if (!p.outer.empty()) raw.push_back(std::move(p));
  }
  m.shadows = polygon_union(raw);
  for (const auto& p : m.shadows) m.boxes.push_back(bounding_box(p));
  return m;
}

inline ShadowMap build_shadow_map(const Scene& s, const Uav& uav) {
  return build_shadow_map(s, uav, default_margin(s));
}

// V_k(g) inside the n_seg-gon around g; nullopt when g is occluded or r_g <= 0.
inline std::optional<Polygon> visibility_region(const ShadowMap& m, Point2 g, double r_g, int n_seg = 64) {
  if (!(r_g > 0.0) || m.occluded(g)) return std::nullopt;
  const Polygon disk = circle_polygon(g, r_g, n_seg);
  std::vector<Polygon> near;
  m.for_each_near(bounding_box(disk), [&](const Polygon& p) { near.push_back(p); });
  return visibility_polygon(g, disk, near);
}

inline double embb_area_spa(const ShadowMap& m, Point2 g, double r_g, int n_seg = 64) {
  if (r_g < 0) throw InvalidParams("embb_area_spa: negative radius");
  const auto v = visibility_region(m, g, r_g, n_seg);
  return v ? polygon_area(*v) : 0.0;
}

inline double urllc_radius_spa(const ShadowMap& m, Point2 g, double r_g) {
  if (r_g < 0) throw InvalidParams("urllc_radius_spa: negative radius");
  if (r_g == 0.0 || m.occluded(g)) return 0.0;
  double best = r_g;
  for (std::size_t i = 0; i < m.shadows.size(); ++i) {
    if (m.boxes[i].distance(g) >= best) continue;
    for_each_edge(m.shadows[i], [&](Point2 a, Point2 b) { best = std::min(best, point_segment_distance(g, {a, b})); });
  }
  return best;
}

}  // namespace shadow
}  // namespace uavlos
