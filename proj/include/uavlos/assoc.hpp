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

// User-UAV association. eMBB users go to the UAV with the largest expected
// throughput over their LoS area, URLLC users to the UAV with the largest
// LoS radius that still fits inside its coverage, and the baseline picks the
// best instantaneous throughput at the slot-start position.

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "uavlos/boolean.hpp"
#include "uavlos/channel.hpp"
#include "uavlos/scene.hpp"
#include "uavlos/shadowcast.hpp"
#include "uavlos/triangulate.hpp"

namespace uavlos {

enum class Policy { embb_area, urllc_radius, max_throughput };

inline const char* policy_name(Policy p) {
  switch (p) {
    case Policy::embb_area: return "embb_area";
    case Policy::urllc_radius: return "urllc_radius";
    case Policy::max_throughput: return "max_throughput";
  }
  return "?";
}

struct CoverageDisk {
  EntityId uav_id = 0;
  Point2 center;
  double radius = 0.0;
  bool contains(Point2 p) const { return distance(p, center) <= radius; }
};

struct UavScore {
  EntityId uav_id = 0;
  bool feasible = false;
  double score = 0.0;
};

struct AssociationResult {
  EntityId user_id = 0;
  std::optional<EntityId> uav_id;
  Policy policy = Policy::embb_area;
  double score = 0.0;
  std::vector<UavScore> per_uav;
};

namespace assoc {

inline constexpr int kCoverageSegments = 128;

// nullopt when the UAV flies at or above its own range.
inline std::optional<CoverageDisk> coverage_disk(const Uav& u) {
  if (u.pos.h >= u.range) return std::nullopt;
  return CoverageDisk{u.id, u.pos.ground(), std::sqrt(u.range * u.range - u.pos.h * u.pos.h)};
}

inline bool los_at(const Scene& s, const Uav& u, Point2 p) {
  const Point3 g{p.x, p.y, 0.0};
  for (const auto& b : s.buildings)
    if (segment_blocked_3d(g, u.pos, b.footprint)) return false;
  return true;
}

// Sum of T_k(centroid) * area over a triangulation of (coverage n LoS area),
// divided by pi R_g^2. A stationary user scores T_k at its own position.
inline double expected_throughput_embb(const Scene& s, const Uav& uav, const User& user, const ShadowMap& map,
                                       int n_seg = 64) {
  const auto cov = coverage_disk(uav);
  if (!cov || !cov->contains(user.pos)) return 0.0;
  const double r_g = user.speed * s.dt;
  if (!(r_g > 0.0))
    return map.occluded(user.pos) ? 0.0 : channel::expected_throughput_bps(uav, user.pos, s.channel);
  const auto v = shadow::visibility_region(map, user.pos, r_g, n_seg);
  if (!v) return 0.0;

  std::vector<Polygon> pieces;
  if (distance(user.pos, cov->center) + r_g <= cov->radius) {
    pieces.push_back(*v);
  } else {
    const Polygon pk = circle_polygon(cov->center, cov->radius, kCoverageSegments);
    pieces = polygon_intersection(pk, *v);
  }
  double sum = 0.0;
  for (const auto& piece : pieces)
    for (const auto& t : triangulate(piece))
      sum += channel::expected_throughput_bps(uav, centroid(t), s.channel) * triangle_area(t);
  return sum / (std::numbers::pi * r_g * r_g);
}

namespace detail {

inline const ShadowMap& map_for(std::span<const ShadowMap> maps, std::size_t i, const Uav& u) {
  if (i >= maps.size() || maps[i].uav_id != u.id) throw InvalidParams("associate: shadow maps must follow scene.uavs");
  return maps[i];
}

// Highest score among feasible entries, ties to the smallest id.
inline void pick(AssociationResult& r, bool allow_zero) {
  for (const auto& e : r.per_uav) {
    if (!e.feasible || (!allow_zero && !(e.score > 0.0))) continue;
    if (!r.uav_id || e.score > r.score || (e.score == r.score && e.uav_id < *r.uav_id)) {
      r.uav_id = e.uav_id;
      r.score = e.score;
    }
  }
  if (!r.uav_id) r.score = 0.0;
}

}  // namespace detail

inline AssociationResult associate_embb(const Scene& s, const User& user, std::span<const ShadowMap> maps,
                                        int n_seg = 64) {
  AssociationResult r{user.id, std::nullopt, Policy::embb_area, 0.0, {}};
  for (std::size_t i = 0; i < s.uavs.size(); ++i) {
    const Uav& u = s.uavs[i];
    const auto cov = coverage_disk(u);
    UavScore e{u.id, cov && cov->contains(user.pos), 0.0};
    if (e.feasible) e.score = expected_throughput_embb(s, u, user, detail::map_for(maps, i, u), n_seg);
    r.per_uav.push_back(e);
  }
  detail::pick(r, false);
  return r;
}

// LoS radius of the user towards one UAV, as used by the URLLC policy.
inline double urllc_radius_for(const Scene& s, const User& user, const ShadowMap& map) {
  return shadow::urllc_radius_spa(map, user.pos, user.speed * s.dt);
}

inline AssociationResult associate_urllc(const Scene& s, const User& user, std::span<const ShadowMap> maps) {
  AssociationResult r{user.id, std::nullopt, Policy::urllc_radius, 0.0, {}};
  for (std::size_t i = 0; i < s.uavs.size(); ++i) {
    const Uav& u = s.uavs[i];
    const ShadowMap& m = detail::map_for(maps, i, u);
    UavScore e{u.id, false, 0.0};
    if (const auto cov = coverage_disk(u); cov && !m.occluded(user.pos)) {
      e.score = urllc_radius_for(s, user, m);
      e.feasible = e.score + distance(user.pos, cov->center) <= cov->radius;
    }
    r.per_uav.push_back(e);
  }
  detail::pick(r, true);
  return r;
}

inline AssociationResult associate_max_throughput(const Scene& s, const User& user) {
  AssociationResult r{user.id, std::nullopt, Policy::max_throughput, 0.0, {}};
  for (const auto& u : s.uavs) {
    const auto cov = coverage_disk(u);
    UavScore e{u.id, cov && cov->contains(user.pos) && los_at(s, u, user.pos), 0.0};
    if (e.feasible) e.score = channel::expected_throughput_bps(u, user.pos, s.channel);
    r.per_uav.push_back(e);
  }
  detail::pick(r, false);
  return r;
}

inline std::vector<ShadowMap> build_all_maps(const Scene& s) {
  std::vector<ShadowMap> maps;
  maps.reserve(s.uavs.size());
  const double margin = shadow::default_margin(s);
  for (const auto& u : s.uavs) maps.push_back(shadow::build_shadow_map(s, u, margin));
  return maps;
}

}  // namespace assoc
}  // namespace uavlos
