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

// Scenario model: region, cuboid buildings, UAVs and mobile ground users, plus
// seeded generation and per-slot user mobility.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <set>
#include <vector>

#include "uavlos/channel.hpp"
#include "uavlos/error.hpp"
#include "uavlos/geometry.hpp"
#include "uavlos/rng.hpp"

namespace uavlos {

using EntityId = std::uint32_t;

struct Region {
  double x_min = 0, x_max = 400, y_min = 0, y_max = 400;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  bool valid() const { return x_max > x_min && y_max > y_min; }
  bool contains(Point2 p) const { return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max; }
  Box box(double margin = 0.0) const {
    return {{x_min - margin, y_min - margin}, {x_max + margin, y_max + margin}};
  }
  friend bool operator==(const Region&, const Region&) = default;
};

struct Building {
  Cuboid footprint;
  friend bool operator==(const Building&, const Building&) = default;
};

struct Uav {
  EntityId id = 0;
  Point3 pos;
  double range = 250.0;
  double tx_power_dbm = 30.0;
  double gain_dbi = 24.5;
  friend bool operator==(const Uav&, const Uav&) = default;
};

enum class Traffic { embb, urllc };

struct User {
  EntityId id = 0;
  Point2 pos;
  double speed = 0.0;
  double heading = 0.0;
  Traffic traffic = Traffic::embb;
  friend bool operator==(const User&, const User&) = default;
};

struct MobilityConfig {
  double v_min = 0.0;
  double v_max = 4.0;
  bool redraw_speed = true;    // false keeps each user's initial speed
  bool redraw_heading = true;  // false keeps the heading (reflected at walls)
  friend bool operator==(const MobilityConfig&, const MobilityConfig&) = default;
};

// Blockage statistics the scene was drawn from. Optional in files; when
// absent they are estimated from the buildings.
struct BlockageHint {
  double lambda_b = 0.0;
  double l_min = 10.0, l_max = 20.0;
  double gamma = 7.63;
  friend bool operator==(const BlockageHint&, const BlockageHint&) = default;
};

struct Scene {
  Region region;
  std::vector<Building> buildings;
  std::vector<Uav> uavs;
  std::vector<User> users;
  double dt = 5.0;
  std::uint64_t seed = 0;
  std::uint64_t slot = 0;
  MobilityConfig mobility;
  ChannelParams channel;
  std::optional<BlockageHint> blockage;

  friend bool operator==(const Scene&, const Scene&) = default;
};

struct SceneParams {
  Region region;
  double lambda_b = 1e-3;
  // lambda_u > 0 places UAVs by a PPP of that density, otherwise uav_count
  // UAVs uniformly.
  double lambda_u = 0.0;
  int uav_count = 4;
  double l_min = 10.0, l_max = 20.0;
  double gamma = 7.63;
  bool random_yaw = false;
  double uav_h_min = 50.0, uav_h_max = 120.0;
  double uav_range = 250.0;
  double tx_power_dbm = 30.0;
  double uav_gain_dbi = 24.5;
  int user_count = 20;
  double urllc_fraction = 0.5;
  double dt = 5.0;
  MobilityConfig mobility;
  ChannelParams channel;
};

inline void validate(const SceneParams& p) {
  const bool ok = p.region.valid() && p.lambda_b >= 0 && p.lambda_u >= 0 && p.uav_count >= 0 && p.l_min > 0 &&
                  p.l_max >= p.l_min && p.gamma > 0 && p.uav_h_min > 0 && p.uav_h_max >= p.uav_h_min &&
                  p.uav_range > 0 && p.user_count >= 0 && p.urllc_fraction >= 0 && p.urllc_fraction <= 1 &&
                  p.dt > 0 && p.mobility.v_min >= 0 && p.mobility.v_max >= p.mobility.v_min &&
                  std::isfinite(p.lambda_b) && std::isfinite(p.lambda_u);
  if (!ok) throw InvalidParams("scene parameters out of range");
  channel::validate(p.channel);
}

inline void validate(const Scene& s) {
  if (!s.region.valid()) throw InvalidParams("scene: empty region");
  if (!(s.dt > 0)) throw InvalidParams("scene: dt must be positive");
  std::set<EntityId> ids;
  for (const auto& u : s.uavs) {
    if (!ids.insert(u.id).second) throw InvalidParams("scene: duplicate uav id");
    if (!(u.range > 0 && u.pos.h > 0 && s.region.contains(u.pos.ground())))
      throw InvalidParams("scene: uav out of range");
  }
  ids.clear();
  for (const auto& u : s.users) {
    if (!ids.insert(u.id).second) throw InvalidParams("scene: duplicate user id");
    if (!(u.speed >= 0 && s.region.contains(u.pos))) throw InvalidParams("scene: user out of range");
  }
  for (const auto& b : s.buildings)
    if (!(b.footprint.len > 0 && b.footprint.wid > 0 && b.footprint.height > 0))
      throw InvalidParams("scene: building with non-positive size");
}

inline Scene generate_scene(const SceneParams& p, std::uint64_t seed) {
  validate(p);
  Scene s;
  s.region = p.region;
  s.dt = p.dt;
  s.seed = seed;
  s.mobility = p.mobility;
  s.channel = p.channel;
  s.blockage = BlockageHint{p.lambda_b, p.l_min, p.l_max, p.gamma};
  const Region& r = p.region;

  // Counts come from one uniform each and every entity from its own keyed
  // stream, so scenes are nested: raising lambda_b or uav_count for the same
  // seed only appends entities.
  const auto n_b = poisson_inverse(p.lambda_b * r.area(), CounterRng(seed, Stream::building_count).uniform01());
  s.buildings.reserve(n_b);
  for (std::uint64_t i = 0; i < n_b; ++i) {
    CounterRng g(seed, Stream::buildings, {i});
    Cuboid c;
    c.cx = g.uniform(r.x_min, r.x_max);
    c.cy = g.uniform(r.y_min, r.y_max);
    c.len = g.uniform(p.l_min, p.l_max);
    c.wid = g.uniform(p.l_min, p.l_max);
    c.height = draw_rayleigh(g, p.gamma);
    c.yaw = p.random_yaw ? g.uniform(0.0, std::numbers::pi) : 0.0;
    s.buildings.push_back({c});
  }

  const std::uint64_t n_u = p.lambda_u > 0
                                ? poisson_inverse(p.lambda_u * r.area(), CounterRng(seed, Stream::uav_count).uniform01())
                                : static_cast<std::uint64_t>(p.uav_count);
  for (std::uint64_t i = 0; i < n_u; ++i) {
    CounterRng g(seed, Stream::uavs, {i});
    Uav u;
    u.id = static_cast<EntityId>(i);
    u.pos.x = g.uniform(r.x_min, r.x_max);
    u.pos.y = g.uniform(r.y_min, r.y_max);
    u.pos.h = g.uniform(p.uav_h_min, p.uav_h_max);
    u.range = p.uav_range;
    u.tx_power_dbm = p.tx_power_dbm;
    u.gain_dbi = p.uav_gain_dbi;
    s.uavs.push_back(u);
  }

  for (int i = 0; i < p.user_count; ++i) {
    CounterRng g(seed, Stream::users, {static_cast<std::uint64_t>(i)});
    User u;
    u.id = static_cast<EntityId>(i);
    u.pos.x = g.uniform(r.x_min, r.x_max);
    u.pos.y = g.uniform(r.y_min, r.y_max);
    u.speed = g.uniform(p.mobility.v_min, p.mobility.v_max);
    u.heading = g.uniform(0.0, 2.0 * std::numbers::pi);
    u.traffic = g.uniform01() < p.urllc_fraction ? Traffic::urllc : Traffic::embb;
    s.users.push_back(u);
  }
  return s;
}

struct MobilityDisk {
  Point2 center;
  double radius = 0.0;
};

inline MobilityDisk mobility_disk(const User& u, double dt) {
  if (!(dt > 0)) throw InvalidParams("mobility_disk: dt must be positive");
  return {u.pos, u.speed * dt};
}

namespace detail {

// Folds x into [lo, hi] by specular reflection; returns the number of
// reflections modulo 2 through `odd`.
inline double reflect_into(double x, double lo, double hi, bool& odd) {
  const double w = hi - lo;
  double m = std::fmod(x - lo, 2.0 * w);
  if (m < 0) m += 2.0 * w;
  const double k = std::floor((x - lo) / w);
  odd = std::fmod(std::abs(k), 2.0) == 1.0;
  return m <= w ? lo + m : hi - (m - w);
}

}  // namespace detail

struct Moved {
  Point2 pos;
  double heading;
};

// Straight-line motion over `dist` meters with reflection at the region walls.
inline Moved move_reflect(const Region& r, Point2 p, double heading, double dist) {
  bool fx = false, fy = false;
  const double x = detail::reflect_into(p.x + dist * std::cos(heading), r.x_min, r.x_max, fx);
  const double y = detail::reflect_into(p.y + dist * std::sin(heading), r.y_min, r.y_max, fy);
  double h = heading;
  if (fx) h = std::numbers::pi - h;
  if (fy) h = -h;
  h = std::fmod(h, 2.0 * std::numbers::pi);
  if (h < 0) h += 2.0 * std::numbers::pi;
  return {{x, y}, h};
}

inline Point2 position_at(const Region& r, const User& u, double t) {
  return move_reflect(r, u.pos, u.heading, u.speed * t).pos;
}

// One slot of motion, then per-slot redraw of speed and heading.
inline Scene advance_users(Scene s) {
  for (auto& u : s.users) {
    const Moved m = move_reflect(s.region, u.pos, u.heading, u.speed * s.dt);
    u.pos = m.pos;
    u.heading = m.heading;
    CounterRng g(s.seed, Stream::mobility, {s.slot, u.id});
    if (s.mobility.redraw_speed) u.speed = g.uniform(s.mobility.v_min, s.mobility.v_max);
    const double h = g.uniform(0.0, 2.0 * std::numbers::pi);
    if (s.mobility.redraw_heading) u.heading = h;
  }
  ++s.slot;
  return s;
}

namespace channel {

inline double rx_power_dbm(const Uav& uav, double user_gain_dbi, double d, const ChannelParams& p) {
  return rx_power_dbm(uav.tx_power_dbm, uav.gain_dbi, user_gain_dbi, d, p);
}

// Throughput at a ground point with unit fading power.
inline double expected_throughput_bps(const Uav& uav, Point2 g, const ChannelParams& p) {
  const double d = distance(Point3{g.x, g.y, 0.0}, uav.pos);
  return throughput_bps(rx_power_dbm(uav, p.user_gain_dbi, d, p), 1.0, p);
}

}  // namespace channel
}  // namespace uavlos
