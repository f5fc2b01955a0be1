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

#include "support/numeric_oracles.hpp"
#include "uavlos/analytic.hpp"

namespace uavlos {
namespace {

using namespace analytic;

constexpr double kGamma = 7.63;

TEST(BlockageStats, HandValues) {
  const auto st = BlockageStats::make(1e-3, 15, 15, kGamma);
  EXPECT_NEAR(st.zeta, 2e-3 * 30 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(st.zeta, 0.019099, 1e-6);
  EXPECT_NEAR(st.tau, 0.225, 1e-15);
  const auto zero = BlockageStats::make(0, 15, 15, kGamma);
  EXPECT_EQ(zero.zeta, 0.0);
  EXPECT_EQ(zero.tau, 0.0);
}

TEST(Xi, TallUavLimit) { EXPECT_NEAR(xi({100, 1e6, 15}, kGamma), 0.0, 1e-3); }

TEST(Xi, GroundLevelUavLimit) {
  const double q = oracle::xi_double_integral(100, 1e-3, 15, kGamma);
  EXPECT_NEAR(q, 1.0, 1e-3);
  EXPECT_NEAR(xi({100, 1e-3, 15}, kGamma), 1.0, 1e-3);
}

TEST(Xi, MatchesQuadratureAtReferencePoint) {
  const double q = oracle::xi_double_integral(100, 80, 15, kGamma);
  EXPECT_NEAR(xi({100, 80, 15}, kGamma) / q, 1.0, 1e-6);
}

TEST(Xi, MatchesQuadratureOnGrid) {
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const double a = 10.0 + 26.0 * i, h = 10.0 + 15.0 * j;
      const double q = oracle::xi_double_integral(a, h, 15, kGamma);
      EXPECT_NEAR(xi({a, h, 15}, kGamma) / q, 1.0, 1e-6) << a << " " << h;
    }
}

// For a < w/2 both erf arguments grow without bound and xi underflows to 0
// for tall UAVs, so the sweep keeps a >= w/2.
TEST(Xi, InUnitIntervalAndDecreasingInHeight) {
  for (double a : {7.5, 12.0, 30.0, 200.0}) {
    double prev = 1.0;
    for (double h = 0.5; h < 400; h *= 1.5) {
      const double v = xi({a, h, 15}, kGamma);
      EXPECT_GT(v, 0.0);
      EXPECT_LT(v, prev);
      prev = v;
    }
  }
}

TEST(Xi, WidthAveragedMatchesQuadrature) {
  const double got = xi_width_averaged(100, 80, 10, 20, kGamma);
  const double want = oracle::average_over_width(
      [](double w) { return oracle::xi_double_integral(100, 80, w, kGamma); }, 10, 20);
  EXPECT_NEAR(got / want, 1.0, 1e-6);
}

TEST(LosProbability, Examples) {
  const auto none = BlockageStats::make(0, 15, 15, kGamma);
  for (double a : {0.0, 10.0, 1e4}) EXPECT_EQ(los_probability(a, none, 0.3), 1.0);
  const auto st = BlockageStats::make(1e-3, 15, 15, kGamma);
  EXPECT_GT(los_probability(50, st, 0.5), los_probability(150, st, 0.5));
  EXPECT_NEAR(los_probability(100, st, 0.5), std::exp(-4.2693), 1e-5);
  EXPECT_NEAR(los_probability(100, st, 0.5), 0.01398, 1e-5);
  EXPECT_NEAR(los_probability(0, st, 0.5), std::exp(-0.45), 1e-15);
}

TEST(EmbbArea, Degenerate) {
  const auto none = BlockageStats::make(0, 15, 15, kGamma);
  EXPECT_NEAR(embb_area(none, 0.4, 20), std::numbers::pi * 400, 1e-9);
  const auto st = BlockageStats::make(1e-3, 15, 15, kGamma);
  EXPECT_EQ(embb_area(st, 0.4, 0), 0.0);
  EXPECT_THROW(embb_area(st, 0.4, -1), InvalidParams);
}

TEST(EmbbArea, UnclampedMatchesQuadrature) {
  for (double lam : {1e-4, 5e-4, 1e-3, 2e-3})
    for (double x : {0.1, 0.5, 0.9}) {
      const auto st = BlockageStats::make(lam, 15, 15, kGamma);
      const double q = oracle::area_integral(st.zeta / x, st.tau / x);
      EXPECT_NEAR(embb_area_unclamped(st, x) / q, 1.0, 1e-9);
    }
}

TEST(EmbbArea, ClampedAndMonotoneInDensity) {
  for (double r : {2.0, 10.0, 20.0, 100.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double lam = 1e-4; lam < 5e-3; lam += 2e-4) {
      const double v = embb_area(BlockageStats::make(lam, 15, 15, kGamma), 0.4, r);
      EXPECT_LE(v, std::numbers::pi * r * r);
      EXPECT_LE(v, prev);
      prev = v;
    }
  }
}

TEST(UrllcRadius, Examples) {
  const auto none = BlockageStats::make(0, 15, 15, kGamma);
  EXPECT_EQ(urllc_radius(none, 0.3, 15), 15.0);
  const auto st = BlockageStats::make(1e-3, 15, 15, kGamma);
  EXPECT_NEAR(urllc_radius_unclamped(st, 0.5), 8.921, 5e-4);
  EXPECT_NEAR(urllc_radius(st, 0.5, 20), urllc_radius_unclamped(st, 0.5), 0.0);
  EXPECT_EQ(urllc_radius(st, 0.5, 3), 3.0);
}

TEST(UrllcRadius, MatchesContactDensityMode) {
  for (double lam : {2e-4, 1e-3, 4e-3})
    for (double x : {0.2, 0.5, 1.0}) {
      const auto st = BlockageStats::make(lam, 15, 15, kGamma);
      const double mode = oracle::contact_density_mode(lam / x);
      EXPECT_NEAR(urllc_radius_unclamped(st, x), mode, 1e-6);
    }
}

TEST(UrllcRadius, ClampedAndMonotoneInDensity) {
  double prev = std::numeric_limits<double>::infinity();
  for (double lam = 1e-4; lam < 5e-3; lam += 2e-4) {
    const double v = urllc_radius(BlockageStats::make(lam, 15, 15, kGamma), 0.4, 12);
    EXPECT_LE(v, 12.0);
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(Evaluate, UsesHintOrEstimates) {
  Scene s;
  s.blockage = BlockageHint{1e-3, 10, 20, kGamma};
  auto st = blockage_stats(s);
  EXPECT_EQ(st.e_w, 15.0);
  EXPECT_EQ(st.lambda_b, 1e-3);

  SceneParams p;
  p.lambda_b = 1e-3;
  s = generate_scene(p, 5);
  s.blockage.reset();
  st = blockage_stats(s);
  EXPECT_NEAR(st.lambda_b, s.buildings.size() / 160000.0, 1e-15);
  EXPECT_NEAR(st.e_w, 15.0, 1.5);
  EXPECT_NEAR(st.gamma, kGamma, 1.0);

  const auto r = evaluate(BlockageStats::make(1e-3, 15, 15, kGamma), 100, 80, 20, WidthMode::mean, 10, 20);
  EXPECT_NEAR(r.xi, xi({100, 80, 15}, kGamma), 0.0);
  EXPECT_LE(r.urllc_radius, 20.0);
  EXPECT_GE(r.embb_area, 0.0);
}

}  // namespace
}  // namespace uavlos
