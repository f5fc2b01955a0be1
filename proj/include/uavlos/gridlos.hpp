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

// Discretization baseline (DA). The mobility disk's bounding box is cut into
// a x a cells centred on the user; a cell is LoS when the segment from its
// centre to the UAV misses every building.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <vector>

#include "uavlos/error.hpp"
#include "uavlos/geometry.hpp"
#include "uavlos/scene.hpp"

namespace uavlos {

struct LosGrid {
  EntityId uav_id = 0;
  Point2 origin;  // centre of the middle cell
  double cell = 1.0;
  int n_half = 0;  // cells run from -n_half to n_half on each axis
  int nx = 1, ny = 1;
  std::vector<std::uint8_t> los;  // row-major, index (j + n_half) * nx + (i + n_half)

  bool at(int i, int j) const { return los[static_cast<std::size_t>((j + n_half) * nx + (i + n_half))] != 0; }
  Point2 center(int i, int j) const { return {origin.x + i * cell, origin.y + j * cell}; }
};

// How cell statuses become an area.
//   visible: a LoS cell counts when the cell one step towards the centre
//            along the straight line is also counted (digital line of sight).
//   flood:   4-connected flood fill from the centre through LoS cells.
//   count:   every LoS cell in the disk.
enum class DaArea { visible, flood, count };

inline const char* da_area_name(DaArea m) {
  switch (m) {
    case DaArea::visible: return "visible";
    case DaArea::flood: return "flood";
    case DaArea::count: return "count";
  }
  return "?";
}

namespace grid {

inline LosGrid build_grid(const Scene& s, const Uav& uav, Point2 center, double r_g, double a) {
  if (!(a > 0)) throw InvalidParams("build_grid: cell size must be positive");
  if (!(r_g >= 0)) throw InvalidParams("build_grid: negative radius");
  LosGrid g;
  g.uav_id = uav.id;
  g.origin = center;
  g.cell = a;
  g.n_half = std::max(0, static_cast<int>(std::ceil(r_g / a - 0.5)));
  g.nx = g.ny = 2 * g.n_half + 1;
  g.los.assign(static_cast<std::size_t>(g.nx) * g.ny, 1);

  // Buildings that can touch any segment from the grid to the UAV.
  const Segment2 spine{center, uav.pos.ground()};
  const double reach = (g.n_half + 1) * a * std::numbers::sqrt2;
  std::vector<const Cuboid*> near;
  for (const auto& b : s.buildings)
    if (point_segment_distance({b.footprint.cx, b.footprint.cy}, spine) <= reach + b.footprint.half_diagonal())
      near.push_back(&b.footprint);

  for (int j = -g.n_half; j <= g.n_half; ++j)
    for (int i = -g.n_half; i <= g.n_half; ++i) {
      const Point2 c = g.center(i, j);
      const Point3 p{c.x, c.y, 0.0};
      for (const Cuboid* b : near)
        if (segment_blocked_3d(p, uav.pos, *b)) {
          g.los[static_cast<std::size_t>((j + g.n_half) * g.nx + (i + g.n_half))] = 0;
          break;
        }
    }
  return g;
}

// Neighbour of (i, j) one Chebyshev step closer to the centre along the
// straight line to it.
inline std::pair<int, int> step_towards_center(int i, int j) {
  const int m = std::max(std::abs(i), std::abs(j));
  const double t = (m - 1.0) / m;
  return {static_cast<int>(std::lround(i * t)), static_cast<int>(std::lround(j * t))};
}

inline double embb_area_da(const LosGrid& g, double r_g, DaArea mode = DaArea::visible) {
  if (!(r_g > 0) || !g.at(0, 0)) return 0.0;
  const int n = g.n_half;
  auto in_disk = [&](int i, int j) { return std::hypot(i * g.cell, j * g.cell) <= r_g; };
  std::vector<std::uint8_t> ok(g.los.size(), 0);
  auto idx = [&](int i, int j) { return static_cast<std::size_t>((j + n) * g.nx + (i + n)); };
  std::size_t cells = 0;

  switch (mode) {
    case DaArea::count:
      for (int j = -n; j <= n; ++j)
        for (int i = -n; i <= n; ++i) cells += g.at(i, j) && in_disk(i, j);
      break;
    case DaArea::visible:
      ok[idx(0, 0)] = 1;
      cells = 1;
      // Chebyshev rings outwards, so each predecessor is settled first.
      for (int m = 1; m <= n; ++m)
        for (int j = -m; j <= m; ++j)
          for (int i = -m; i <= m; ++i) {
            if (std::max(std::abs(i), std::abs(j)) != m) continue;
            const auto [pi, pj] = step_towards_center(i, j);
            if (g.at(i, j) && ok[idx(pi, pj)]) {
              ok[idx(i, j)] = 1;
              cells += in_disk(i, j);
            }
          }
      break;
    case DaArea::flood: {
      std::deque<std::pair<int, int>> q{{0, 0}};
      ok[idx(0, 0)] = 1;
      while (!q.empty()) {
        const auto [i, j] = q.front();
        q.pop_front();
        ++cells;
        const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          const int a = i + di[k], b = j + dj[k];
          if (std::abs(a) > n || std::abs(b) > n || ok[idx(a, b)] || !g.at(a, b) || !in_disk(a, b)) continue;
          ok[idx(a, b)] = 1;
          q.emplace_back(a, b);
        }
      }
      break;
    }
  }
  return static_cast<double>(cells) * g.cell * g.cell;
}

inline double urllc_radius_da(const LosGrid& g, double r_g) {
  if (!(r_g > 0) || !g.at(0, 0)) return 0.0;
  double nearest = std::numeric_limits<double>::infinity();
  for (int j = -g.n_half; j <= g.n_half; ++j)
    for (int i = -g.n_half; i <= g.n_half; ++i)
      if (!g.at(i, j)) nearest = std::min(nearest, std::hypot(i * g.cell, j * g.cell));
  return std::min(r_g, std::max(0.0, nearest - g.cell / 2.0));
}

}  // namespace grid
}  // namespace uavlos
