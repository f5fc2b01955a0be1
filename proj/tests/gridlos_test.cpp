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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "uavlos/gridlos.hpp"
#include "uavlos/shadowcast.hpp"

namespace uavlos {
namespace {

using namespace grid;

Scene empty_scene() {
  Scene s;
  Uav u;
  u.pos = {200, 200, 90};
  s.uavs.push_back(u);
  return s;
}

Scene random_scene(std::uint64_t seed) {
  SceneParams p;
  p.lambda_b = 1e-3;
  p.uav_count = 1;
  p.user_count = 12;
  p.mobility.v_min = 2;
  p.mobility.v_max = 4;
  return generate_scene(p, seed);
}

TEST(BuildGrid, NoBuildingsAllLos) {
  const Scene s = empty_scene();
  const auto g = build_grid(s, s.uavs[0], {150, 150}, 10, 0.25);
  EXPECT_EQ(g.nx, 81);
  EXPECT_TRUE(std::all_of(g.los.begin(), g.los.end(), [](auto v) { return v == 1; }));
  EXPECT_NEAR(embb_area_da(g, 10) / (std::numbers::pi * 100), 1.0, 0.02);
  EXPECT_EQ(urllc_radius_da(g, 10), 10.0);
  EXPECT_THROW(build_grid(s, s.uavs[0], {150, 150}, 10, 0.0), InvalidParams);
}

TEST(BuildGrid, CoarsestResolutionIsOneCell) {
  Scene s = empty_scene();
  s.buildings.push_back({{100, 100, 10, 10, 30, 0}});
  const auto lit = build_grid(s, s.uavs[0], {50, 150}, 10, 20);
  EXPECT_EQ(lit.nx, 1);
  EXPECT_TRUE(lit.at(0, 0));
  const auto dark = build_grid(s, s.uavs[0], {100, 100}, 10, 20);
  EXPECT_EQ(dark.nx, 1);
  EXPECT_FALSE(dark.at(0, 0));
  EXPECT_EQ(embb_area_da(dark, 10), 0.0);
  EXPECT_EQ(urllc_radius_da(dark, 10), 0.0);
}

TEST(BuildGrid, CellsAgreeWithShadowMap) {
  Scene s = empty_scene();
  s.uavs[0].pos = {100, 100, 60};
  s.buildings.push_back({{160, 100, 12, 20, 35, 0.2}});
  const auto m = shadow::build_shadow_map(s, s.uavs[0], 50);
  const auto g = build_grid(s, s.uavs[0], {185, 100}, 20, 0.5);
  int dark = 0;
  for (int j = -g.n_half; j <= g.n_half; ++j)
    for (int i = -g.n_half; i <= g.n_half; ++i) {
      const Point2 c = g.center(i, j);
      if (distance_to_boundary(c, m.shadows[0]) < 1e-6) continue;
      EXPECT_EQ(g.at(i, j), !m.occluded(c));
      dark += !g.at(i, j);
    }
  EXPECT_GT(dark, 100);
}

TEST(UrllcRadiusDa, HandExample) {
  LosGrid g;
  g.cell = 0.5;
  g.n_half = 20;
  g.nx = g.ny = 41;
  g.los.assign(41 * 41, 1);
  g.los[static_cast<std::size_t>((0 + 20) * 41 + (10 + 20))] = 0;  // cell centre at distance 5
  EXPECT_NEAR(urllc_radius_da(g, 10), 4.75, 1e-12);
  EXPECT_EQ(urllc_radius_da(g, 3), 3.0);
}

TEST(EmbbAreaDa, ModesAreNested) {
  const Scene s = random_scene(5);
  for (const auto& u : s.users) {
    const double rg = u.speed * s.dt;
    const auto g = build_grid(s, s.uavs[0], u.pos, rg, 0.5);
    const double count = embb_area_da(g, rg, DaArea::count);
    EXPECT_LE(embb_area_da(g, rg, DaArea::flood), count);
    EXPECT_LE(embb_area_da(g, rg, DaArea::visible), count);
  }
}

TEST(StepTowardsCenter, ReducesChebyshevDistanceByOne) {
  for (int i = -6; i <= 6; ++i)
    for (int j = -6; j <= 6; ++j) {
      if (i == 0 && j == 0) continue;
      const auto [a, b] = step_towards_center(i, j);
      EXPECT_EQ(std::max(std::abs(a), std::abs(b)), std::max(std::abs(i), std::abs(j)) - 1);
      EXPECT_LE(std::abs(a - i), 1);
      EXPECT_LE(std::abs(b - j), 1);
    }
}

TEST(Convergence, RadiusWithinCellSizeOfSpa) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const Scene s = random_scene(seed);
    const auto m = shadow::build_shadow_map(s, s.uavs[0]);
    for (const auto& u : s.users) {
      const double rg = u.speed * s.dt;
      if (m.occluded(u.pos)) continue;
      const double spa = shadow::urllc_radius_spa(m, u.pos, rg);
      const double a = 0.25;
      const double da = urllc_radius_da(build_grid(s, s.uavs[0], u.pos, rg, a), rg);
      EXPECT_NEAR(da, spa, a * std::numbers::sqrt2);
    }
  }
}

TEST(Convergence, AreaErrorShrinksWithResolution) {
  double coarse = 0, fine = 0;
  for (std::uint64_t seed : {1, 2, 3, 4}) {
    const Scene s = random_scene(seed);
    const auto m = shadow::build_shadow_map(s, s.uavs[0]);
    for (const auto& u : s.users) {
      const double rg = u.speed * s.dt;
      const double spa = shadow::embb_area_spa(m, u.pos, rg);
      if (spa <= 0) continue;
      coarse += std::abs(embb_area_da(build_grid(s, s.uavs[0], u.pos, rg, 4), rg) - spa) / spa;
      fine += std::abs(embb_area_da(build_grid(s, s.uavs[0], u.pos, rg, 0.25), rg) - spa) / spa;
    }
  }
  EXPECT_LT(fine, 0.25 * coarse);
}

}  // namespace
}  // namespace uavlos
