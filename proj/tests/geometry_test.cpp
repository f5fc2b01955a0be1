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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "support/oracles.hpp"
#include "uavlos/boolean.hpp"
#include "uavlos/geometry.hpp"
#include "uavlos/triangulate.hpp"
#include "uavlos/visibility.hpp"

namespace uavlos {
namespace {

Polygon rect(double x0, double y0, double x1, double y1) { return {rectangle_ring({x0, y0}, {x1, y1}), {}}; }

bool same_vertex_set(const Ring& a, std::vector<Point2> b) {
  if (a.size() != b.size()) return false;
  for (auto p : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](Point2 q) { return distance(p, q) < 1e-12; });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

// Random rotated rectangle not containing `avoid`.
Polygon random_box(std::mt19937_64& rng, Point2 center_lo, Point2 center_hi, Point2 avoid) {
  std::uniform_real_distribution<double> ux(center_lo.x, center_hi.x), uy(center_lo.y, center_hi.y);
  std::uniform_real_distribution<double> us(0.5, 6.0), ua(0.0, std::numbers::pi);
  while (true) {
    Cuboid c{ux(rng), uy(rng), us(rng), us(rng), 1.0, ua(rng)};
    auto fp = c.footprint();
    Polygon p{Ring(fp.begin(), fp.end()), {}};
    if (distance_to_boundary(avoid, p) > 0.05 && point_in_polygon(avoid, p) == Location::outside) return p;
  }
}

// ---------------------------------------------------------------- convex hull

TEST(ConvexHull, DropsInteriorPoint) {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  const Polygon h = convex_hull(pts);
  EXPECT_TRUE(same_vertex_set(h.outer, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_GT(signed_area(h.outer), 0.0);
}

TEST(ConvexHull, IdentityOnTriangle) {
  const std::vector<Point2> pts{{0, 0}, {2, 0}, {1, 1}};
  EXPECT_TRUE(same_vertex_set(convex_hull(pts).outer, pts));
}

TEST(ConvexHull, ProjectedUnitCubeIsHexagon) {
  // Unit cube on [0,1]^2 x [0,1], UAV beyond the (1,1) corner.
  const Point3 uav{3.0, 2.5, 5.0};
  std::vector<Point2> pts;
  for (double x : {0.0, 1.0})
    for (double y : {0.0, 1.0}) {
      pts.push_back({x, y});
      const double s = 1.0 / (1.0 - uav.h);  // h_i / (h_i - h_k) with h_i = 1
      pts.push_back({x - s * (x - uav.x), y - s * (y - uav.y)});
    }
  const auto expected = oracle::brute_force_hull_vertices(pts);
  const Polygon h = convex_hull(pts);
  EXPECT_EQ(expected.size(), 6u);
  EXPECT_EQ(h.outer.size(), 6u);
  EXPECT_TRUE(same_vertex_set(h.outer, expected));
}

TEST(ConvexHull, DegenerateInputs) {
  const std::vector<Point2> two{{0, 0}, {1, 1}, {1, 1}};
  const std::vector<Point2> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  EXPECT_THROW(convex_hull(two), DegenerateInput);
  EXPECT_THROW(convex_hull(line), DegenerateInput);
}

TEST(ConvexHull, PropertyIdempotentAndMatchesBruteForce) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point2> pts(3 + trial % 30);
    for (auto& p : pts) p = {u(rng), u(rng)};
    const Polygon h = convex_hull(pts);
    EXPECT_TRUE(same_vertex_set(h.outer, oracle::brute_force_hull_vertices(pts)));
    const Polygon h2 = convex_hull(h.outer);
    EXPECT_TRUE(same_vertex_set(h2.outer, {h.outer.begin(), h.outer.end()}));
    for (auto p : pts) EXPECT_NE(point_in_polygon(p, h), Location::outside);
  }
}

// ------------------------------------------------------------ area / location

TEST(PolygonArea, SquareAndHole) {
  EXPECT_DOUBLE_EQ(polygon_area(rect(0, 0, 1, 1)), 1.0);
  Polygon p = rect(0, 0, 1, 1);
  p.holes.push_back({{0.25, 0.25}, {0.25, 0.75}, {0.75, 0.75}, {0.75, 0.25}});
  EXPECT_DOUBLE_EQ(polygon_area(p), 0.75);
}

TEST(PolygonArea, RandomTwelveGonMatchesMonteCarlo) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ur(2.0, 10.0), ua(0.0, 2 * std::numbers::pi);
  std::vector<double> ang(12);
  for (auto& a : ang) a = ua(rng);
  std::sort(ang.begin(), ang.end());
  Ring r;
  for (double a : ang) {
    const double rad = ur(rng);
    r.push_back({rad * std::cos(a), rad * std::sin(a)});
  }
  const Polygon p{r, {}};
  const int n = 1'000'000;
  std::uniform_real_distribution<double> ub(-10, 10);
  int hits = 0;
  for (int i = 0; i < n; ++i)
    if (oracle::ring_contains(r, {ub(rng), ub(rng)})) ++hits;
  const double frac = static_cast<double>(hits) / n;
  const double est = 400.0 * frac;
  const double sigma = 400.0 * std::sqrt(frac * (1 - frac) / n);
  EXPECT_NEAR(polygon_area(p), est, 3 * sigma);
}

TEST(PointInPolygon, Classification) {
  const Polygon sq = rect(0, 0, 1, 1);
  EXPECT_EQ(point_in_polygon({0.5, 0.5}, sq), Location::inside);
  EXPECT_EQ(point_in_polygon({2, 2}, sq), Location::outside);
  EXPECT_EQ(point_in_polygon({1.0, 0.5}, sq), Location::boundary);
  Polygon holed = rect(0, 0, 4, 4);
  holed.holes.push_back({{1, 1}, {1, 3}, {3, 3}, {3, 1}});
  EXPECT_EQ(point_in_polygon({2, 2}, holed), Location::outside);
  EXPECT_EQ(point_in_polygon({1, 2}, holed), Location::boundary);
  EXPECT_EQ(point_in_polygon({0.5, 2}, holed), Location::inside);
}

TEST(PointSegmentDistance, Cases) {
  EXPECT_DOUBLE_EQ(point_segment_distance({0, 1}, {{-1, 0}, {1, 0}}), 1.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({2, 0}, {{-1, 0}, {1, 0}}), 1.0);
  // Brute-force minimum over sampled points of the short segment.
  const Segment2 s{{0, 0}, {0, 0.001}};
  double best = 1e300;
  for (int i = 0; i <= 100000; ++i) best = std::min(best, distance({3, 4}, s.a + (s.b - s.a) * (i / 100000.0)));
  EXPECT_NEAR(point_segment_distance({3, 4}, s), best, 1e-12);
  EXPECT_NEAR(point_segment_distance({3, 4}, s), 5.0, 1e-3);
}

// --------------------------------------------------------------- circle

TEST(CirclePolygon, AreasAndRadius) {
  EXPECT_NEAR(polygon_area(circle_polygon({0, 0}, 1.0, 4)), 2.0, 1e-12);
  const double a64 = polygon_area(circle_polygon({0, 0}, 1.0, 64));
  EXPECT_NEAR(a64, 0.5 * 64 * std::sin(2 * std::numbers::pi / 64), 1e-12);
  EXPECT_LT((std::numbers::pi - a64) / std::numbers::pi, 0.0017);
  for (auto p : circle_polygon({5, 5}, 10.0, 64).outer) EXPECT_NEAR(distance(p, {5, 5}), 10.0, 1e-12);
  EXPECT_THROW(circle_polygon({0, 0}, 0.0, 64), InvalidParams);
}

// ------------------------------------------------------------ segment/cuboid

TEST(SegmentBlocked3d, Examples) {
  const Point3 a{0, 0, 0}, b{100, 0, 100};
  const Cuboid tall{50, 0, 10, 10, 80, 0};
  const Cuboid low{50, 0, 10, 10, 20, 0};
  EXPECT_TRUE(segment_blocked_3d(a, b, tall));
  EXPECT_FALSE(segment_blocked_3d(a, b, low));
  EXPECT_EQ(segment_blocked_3d(a, b, tall), oracle::sampled_segment_blocked(a, b, tall, 10000));
  EXPECT_EQ(segment_blocked_3d(a, b, low), oracle::sampled_segment_blocked(a, b, low, 10000));
  EXPECT_FALSE(segment_blocked_3d({0, 0, 30}, {100, 0, 40}, low));
}

TEST(SegmentBlocked3d, PropertyAgreesWithSampling) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-30, 30), uh(0, 60), us(2, 20), uy(0, std::numbers::pi);
  int checked = 0;
  while (checked < 10000) {
    const Point3 a{u(rng), u(rng), 0.0}, b{u(rng), u(rng), uh(rng) + 20};
    const Cuboid c{u(rng) * 0.5, u(rng) * 0.5, us(rng), us(rng), uh(rng) + 1, uy(rng)};
    // Clearance: skip pairs where a slightly inflated and deflated box disagree.
    Cuboid grow = c, shrink = c;
    const double m = 0.05;
    grow.len += 2 * m; grow.wid += 2 * m; grow.height += m;
    shrink.len -= 2 * m; shrink.wid -= 2 * m; shrink.height -= m;
    if (segment_blocked_3d(a, b, grow) != segment_blocked_3d(a, b, shrink)) continue;
    ASSERT_EQ(segment_blocked_3d(a, b, c), oracle::sampled_segment_blocked(a, b, c, 10000));
    ++checked;
  }
}

// ---------------------------------------------------------------- booleans

TEST(PolygonUnion, DisjointSquaresUnchanged) {
  const std::vector<Polygon> in{rect(0, 0, 1, 1), rect(3, 3, 4, 4)};
  const auto out = polygon_union(in);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_TRUE(same_vertex_set(out[0].outer, {in[0].outer.begin(), in[0].outer.end()}));
  EXPECT_TRUE(same_vertex_set(out[1].outer, {in[1].outer.begin(), in[1].outer.end()}));
}

TEST(PolygonUnion, OverlappingSquaresMergeToRectangle) {
  const std::vector<Polygon> in{rect(0, 0, 1, 1), rect(0.5, 0, 1.5, 1)};
  const auto out = polygon_union(in);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].outer.size(), 4u);
  const double raster = oracle::raster_area(
      [&](double x, double y) { return oracle::any_contains(in, {x, y}); }, {-0.5, -0.5}, {2, 1.5}, 1e-3);
  EXPECT_NEAR(raster, 1.5, 1e-9);
  EXPECT_NEAR(polygon_area(out[0]), raster, 1e-9);
}

TEST(PolygonUnion, FrameHasHole) {
  const std::vector<Polygon> in{rect(0, 0, 3, 1), rect(0, 2, 3, 3), rect(0, 0, 1, 3), rect(2, 0, 3, 3)};
  const auto out = polygon_union(in);
  ASSERT_EQ(out.size(), 1u);
  ASSERT_EQ(out[0].holes.size(), 1u);
  const double hole_raster = oracle::raster_area(
      [&](double x, double y) { return !oracle::any_contains(in, {x, y}); }, {0, 0}, {3, 3}, 1e-3);
  EXPECT_NEAR(std::abs(signed_area(out[0].holes[0])), hole_raster, 1e-9);
  EXPECT_NEAR(polygon_area(out[0]), 8.0, 1e-12);
  EXPECT_LT(signed_area(out[0].holes[0]), 0.0);
}

TEST(PolygonUnion, CornerTouchingSquaresStaySeparate) {
  const std::vector<Polygon> in{rect(0, 0, 1, 1), rect(1, 1, 2, 2)};
  auto both = in;
  both.push_back(rect(0.5, 0.5, 0.8, 0.8));  // forces the overlay path
  const auto out = polygon_union(both);
  EXPECT_EQ(out.size(), 2u);
  EXPECT_NEAR(total_area(out), 2.0, 1e-12);
}

TEST(PolygonIntersection, Examples) {
  const Polygon sq = rect(0, 0, 1, 1);
  const auto self = polygon_intersection(sq, sq);
  ASSERT_EQ(self.size(), 1u);
  EXPECT_NEAR(polygon_area(self[0]), 1.0, 1e-9);
  EXPECT_TRUE(polygon_intersection(sq, rect(2, 2, 3, 3)).empty());
  const Polygon shifted = rect(0.5, 0.5, 1.5, 1.5);
  const auto out = polygon_intersection(sq, shifted);
  ASSERT_EQ(out.size(), 1u);
  const double raster = oracle::raster_area(
      [&](double x, double y) { return oracle::polygon_contains(sq, {x, y}) && oracle::polygon_contains(shifted, {x, y}); },
      {0, 0}, {1.5, 1.5}, 1e-3);
  EXPECT_NEAR(raster, 0.25, 1e-9);
  EXPECT_NEAR(polygon_area(out[0]), 0.25, 1e-12);
}

TEST(PolygonIntersection, EdgeTouchingIsEmpty) {
  EXPECT_TRUE(polygon_intersection(rect(0, 0, 1, 1), rect(1, 0, 2, 1)).empty());
}

class BooleanProperty : public ::testing::TestWithParam<int> {};

TEST_P(BooleanProperty, PointSetOracleAndAreaBounds) {
  std::mt19937_64 rng(100 + GetParam());
  std::vector<Polygon> in;
  const int n = 2 + GetParam() % 12;
  for (int i = 0; i < n; ++i) in.push_back(random_box(rng, {0, 0}, {12, 12}, {-100, -100}));
  const auto uni = polygon_union(in);
  double max_a = 0, sum_a = 0;
  for (const auto& p : in) {
    max_a = std::max(max_a, polygon_area(p));
    sum_a += polygon_area(p);
  }
  const double ua = total_area(uni);
  EXPECT_GE(ua, max_a - 1e-9);
  EXPECT_LE(ua, sum_a + 1e-9);

  // Pairwise disjoint output: no probe lies in two result polygons.
  std::uniform_real_distribution<double> u(-5, 17);
  int probes = 0;
  while (probes < 1000) {
    const Point2 q{u(rng), u(rng)};
    bool near = false;
    for (const auto& p : in) near = near || distance_to_boundary(q, p) < 1e-6;
    for (const auto& p : uni) near = near || distance_to_boundary(q, p) < 1e-6;
    if (near) continue;
    ++probes;
    const bool expect = oracle::any_contains(in, q);
    int count = 0;
    for (const auto& p : uni) count += point_in_polygon(q, p) == Location::inside;
    ASSERT_EQ(count, expect ? 1 : 0) << "probe " << q.x << "," << q.y;
  }

  // Intersection of the first two inputs.
  const auto inter = polygon_intersection(in[0], in[1]);
  probes = 0;
  while (probes < 1000) {
    const Point2 q{u(rng), u(rng)};
    if (distance_to_boundary(q, in[0]) < 1e-6 || distance_to_boundary(q, in[1]) < 1e-6) continue;
    bool near = false;
    for (const auto& p : inter) near = near || distance_to_boundary(q, p) < 1e-6;
    if (near) continue;
    ++probes;
    const bool expect = oracle::polygon_contains(in[0], q) && oracle::polygon_contains(in[1], q);
    bool got = false;
    for (const auto& p : inter) got = got || point_in_polygon(q, p) == Location::inside;
    ASSERT_EQ(got, expect);
  }
}

INSTANTIATE_TEST_SUITE_P(Random, BooleanProperty, ::testing::Range(0, 40));

TEST(PolygonUnion, UnionOfUnionWithHolesAgainstRaster) {
  // Ring of boxes around the origin creates a lit enclave.
  std::vector<Polygon> in;
  for (int k = 0; k < 8; ++k) {
    const double a = k * std::numbers::pi / 4;
    Cuboid c{5 * std::cos(a), 5 * std::sin(a), 5.0, 2.0, 1.0, a + std::numbers::pi / 2};
    auto fp = c.footprint();
    in.push_back({Ring(fp.begin(), fp.end()), {}});
  }
  const auto uni = polygon_union(in);
  ASSERT_EQ(uni.size(), 1u);
  EXPECT_EQ(uni[0].holes.size(), 1u);
  const double raster = oracle::raster_area(
      [&](double x, double y) { return oracle::any_contains(in, {x, y}); }, {-9, -9}, {9, 9}, 5e-3);
  // Cell-count error is bounded by perimeter * resolution.
  EXPECT_NEAR(total_area(uni), raster, 0.1);
  EXPECT_EQ(point_in_polygon({0, 0}, uni[0]), Location::outside);
}

// ---------------------------------------------------------------- visibility

TEST(Visibility, NoObstaclesGivesOuter) {
  const Polygon outer = circle_polygon({0, 0}, 10, 64);
  const Polygon v = visibility_polygon({1, 1}, outer, {});
  EXPECT_NEAR(polygon_area(v), polygon_area(outer), 1e-12);
}

TEST(Visibility, SquareObstacleMatchesRayCasting) {
  const Polygon outer = rect(-10, -10, 10, 10);
  const std::vector<Polygon> obs{rect(2, -1, 4, 1)};
  const Polygon v = visibility_polygon({0, 0}, outer, obs);
  const double oracle_area = oracle::ray_cast_visibility_area({0, 0}, outer, obs, 10000);
  EXPECT_NEAR(polygon_area(v), oracle_area, 0.005 * oracle_area);
  EXPECT_LT(polygon_area(v), 400.0);
  // Hidden wedge {2 <= x <= 10, |y| <= x/2} has area 48.
  const double exact = 400.0 - 48.0;
  EXPECT_NEAR(polygon_area(v), exact, 1e-9);
}

TEST(Visibility, ObstacleTouchingOuterBoundary) {
  const Polygon outer = rect(-10, -10, 10, 10);
  const std::vector<Polygon> obs{rect(5, -1, 10, 1)};
  const Polygon v = visibility_polygon({0, 0}, outer, obs);
  const double oracle_area = oracle::ray_cast_visibility_area({0, 0}, outer, obs, 10000);
  EXPECT_LT(polygon_area(v), 400.0);
  EXPECT_NEAR(polygon_area(v), oracle_area, 0.005 * oracle_area);
}

TEST(Visibility, OriginInsideObstacleThrows) {
  const Polygon outer = rect(-10, -10, 10, 10);
  const std::vector<Polygon> obs{rect(-1, -1, 1, 1)};
  EXPECT_THROW(visibility_polygon({0, 0}, outer, obs), OriginOccluded);
}

class VisibilityProperty : public ::testing::TestWithParam<int> {};

TEST_P(VisibilityProperty, SubsetAndRayProperty) {
  std::mt19937_64 rng(500 + GetParam());
  const Point2 g{0, 0};
  const Polygon outer = circle_polygon(g, 20, 64);
  std::vector<Polygon> raw;
  for (int i = 0; i < 1 + GetParam() % 8; ++i) raw.push_back(random_box(rng, {-22, -22}, {22, 22}, g));
  const auto obs = polygon_union(raw);
  const Polygon v = visibility_polygon(g, outer, obs);
  EXPECT_EQ(point_in_polygon(g, v), Location::inside);
  const double oracle_area = oracle::ray_cast_visibility_area(g, outer, obs, 20000);
  EXPECT_NEAR(polygon_area(v), oracle_area, 0.005 * oracle_area);

  int probes = 0;
  while (probes < 1000) {
    const Point2 p = oracle::sample_in_ring(outer.outer, rng);
    if (distance_to_boundary(p, v) < 1e-6) continue;
    bool near = false;
    for (const auto& o : obs) near = near || distance_to_boundary(p, o) < 1e-6;
    if (near) continue;
    ++probes;
    const bool in_v = point_in_polygon(p, v) == Location::inside;
    ASSERT_EQ(in_v, oracle::segment_visible(g, p, obs)) << p.x << "," << p.y;
    if (in_v) {
      ASSERT_FALSE(oracle::any_contains(obs, p));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Random, VisibilityProperty, ::testing::Range(0, 30));

// ------------------------------------------------------------- triangulation

double tri_sum(const std::vector<Triangle>& ts) {
  double s = 0;
  for (const auto& t : ts) s += triangle_area(t);
  return s;
}

TEST(Triangulate, UnitSquare) {
  const auto ts = triangulate(rect(0, 0, 1, 1));
  ASSERT_EQ(ts.size(), 2u);
  for (const auto& t : ts) EXPECT_NEAR(triangle_area(t), 0.5, 1e-15);
}

TEST(Triangulate, ConvexNGonEulerCount) {
  for (int n : {3, 5, 8, 17, 64}) {
    const Polygon p = circle_polygon({1, 2}, 3, n);
    const auto ts = triangulate(p);
    EXPECT_EQ(ts.size(), static_cast<std::size_t>(n - 2));
    EXPECT_NEAR(tri_sum(ts), polygon_area(p), 1e-12);
  }
}

TEST(Triangulate, SquareWithHole) {
  Polygon p = rect(0, 0, 4, 4);
  p.holes.push_back({{1, 1}, {1, 3}, {3, 3}, {3, 1}});
  const auto ts = triangulate(p);
  EXPECT_EQ(ts.size(), 8u);
  const double raster = oracle::raster_area(
      [&](double x, double y) { return oracle::polygon_contains(p, {x, y}); }, {0, 0}, {4, 4}, 1e-3);
  EXPECT_NEAR(tri_sum(ts), raster, 1e-9);
  EXPECT_NEAR(tri_sum(ts), 12.0, 1e-12);
}

TEST(Triangulate, ZeroAreaThrows) {
  EXPECT_THROW(triangulate(Polygon{{{0, 0}, {1, 1}, {2, 2}}, {}}), DegenerateInput);
}

class TriangulateProperty : public ::testing::TestWithParam<int> {};

TEST_P(TriangulateProperty, ConservationAndDisjointness) {
  std::mt19937_64 rng(900 + GetParam());
  std::vector<Polygon> raw;
  for (int i = 0; i < 3 + GetParam() % 10; ++i) raw.push_back(random_box(rng, {0, 0}, {10, 10}, {-100, -100}));
  // Visibility polygons and unions with holes are the shapes met in practice.
  std::vector<Polygon> shapes = polygon_union(raw);
  Polygon frame = rect(-6, -6, 16, 16);
  for (const auto& s : shapes) frame.holes.push_back(Ring(s.outer.rbegin(), s.outer.rend()));
  if (shapes.size() >= 1) shapes.push_back(frame);
  for (const auto& p : shapes) {
    const auto ts = triangulate(p);
    const double a = polygon_area(p);
    EXPECT_NEAR(tri_sum(ts), a, 1e-9 * a);
    for (const auto& t : ts) EXPECT_GE(triangle_area(t), 0.0);
    std::uniform_real_distribution<double> u(-7, 17);
    for (int k = 0; k < 300; ++k) {
      const Point2 q{u(rng), u(rng)};
      if (distance_to_boundary(q, p) < 1e-6) continue;
      int inside = 0;
      bool near_edge = false;
      for (const auto& t : ts) {
        const Polygon tp{{t.a, t.b, t.c}, {}};
        const Location l = point_in_polygon(q, tp);
        near_edge = near_edge || distance_to_boundary(q, tp) < 1e-6;
        inside += l == Location::inside;
      }
      if (near_edge) continue;
      EXPECT_EQ(inside, oracle::polygon_contains(p, q) ? 1 : 0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Random, TriangulateProperty, ::testing::Range(0, 20));

}  // namespace
}  // namespace uavlos
