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

// Polygon union and intersection by edge overlay.
//
// All input edges are split at their mutual intersections (crossings,
// T-junctions and collinear overlaps), vertices are snapped within kEpsGeom,
// and every resulting sub-edge is classified by counting how many inputs
// cover the region immediately to its left and to its right. Sub-edges that
// separate a covered side from an uncovered one form the result boundary,
// oriented with the covered side on the left; they are linked into rings by
// always taking the outgoing edge that turns most sharply left, which keeps
// rings that touch at a single vertex separate.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <unordered_map>
#include <vector>

#include "uavlos/geometry.hpp"

namespace uavlos {
namespace detail {

class VertexIndex {
 public:
  int id(Point2 p) {
    const std::int64_t ix = static_cast<std::int64_t>(std::floor(p.x / kQuantum));
    const std::int64_t iy = static_cast<std::int64_t>(std::floor(p.y / kQuantum));
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(key(ix + dx, iy + dy));
        if (it == cells_.end()) continue;
        for (int v : it->second)
          if (distance(points_[v], p) <= kEpsGeom) return v;
      }
    const int v = static_cast<int>(points_.size());
    points_.push_back(p);
    cells_[key(ix, iy)].push_back(v);
    return v;
  }

  const std::vector<Point2>& points() const { return points_; }

 private:
  static constexpr double kQuantum = 4 * kEpsGeom;
  static std::uint64_t key(std::int64_t x, std::int64_t y) {
    return static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(y);
  }
  std::unordered_map<std::uint64_t, std::vector<int>> cells_;
  std::vector<Point2> points_;
};

struct OverlayEdge {
  Point2 a, b;
  int poly;
  Box box;
  std::vector<Point2> splits;
};

// Signed distance of r from the directed line p->q.
inline double line_side(Point2 p, Point2 q, Point2 r) { return cross(q - p, r - p) / norm(q - p); }

inline bool strictly_inside_segment(Point2 x, Point2 p, Point2 q) {
  if (distance(x, p) <= kEpsGeom || distance(x, q) <= kEpsGeom) return false;
  const Point2 d = q - p;
  const double t = dot(x - p, d) / dot(d, d);
  return t > 0.0 && t < 1.0;
}

inline void intersect_edges(OverlayEdge& e, OverlayEdge& f) {
  const double dc = line_side(e.a, e.b, f.a), dd = line_side(e.a, e.b, f.b);
  const double da = line_side(f.a, f.b, e.a), db = line_side(f.a, f.b, e.b);
  const bool zc = std::abs(dc) <= kEpsGeom, zd = std::abs(dd) <= kEpsGeom;
  const bool za = std::abs(da) <= kEpsGeom, zb = std::abs(db) <= kEpsGeom;
  if (zc && strictly_inside_segment(f.a, e.a, e.b)) e.splits.push_back(f.a);
  if (zd && strictly_inside_segment(f.b, e.a, e.b)) e.splits.push_back(f.b);
  if (za && strictly_inside_segment(e.a, f.a, f.b)) f.splits.push_back(e.a);
  if (zb && strictly_inside_segment(e.b, f.a, f.b)) f.splits.push_back(e.b);
  if (zc || zd || za || zb) return;
  if ((dc > 0) != (dd > 0) && (da > 0) != (db > 0)) {
    const Point2 p = e.a + (e.b - e.a) * (da / (da - db));
    e.splits.push_back(p);
    f.splits.push_back(p);
  }
}

inline bool is_valid_ring(const Ring& r) { return r.size() >= 3 && std::abs(signed_area(r)) > 0.0; }

// Removes vertices lying on the straight line through their neighbours.
inline Ring drop_collinear(Ring r) {
  bool changed = true;
  while (changed && r.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < r.size() && r.size() >= 3; ++i) {
      const Point2 p = r[(i + r.size() - 1) % r.size()], c = r[i], n = r[(i + 1) % r.size()];
      if (distance(p, n) > kEpsGeom && std::abs(line_side(p, n, c)) <= kEpsGeom &&
          dot(c - p, n - c) > 0.0) {
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      }
    }
  }
  return r;
}

// Core overlay: a sub-edge side is "covered" when at least `need` of the
// inputs cover it.
inline std::vector<Polygon> overlay(std::span<const Polygon> inputs, int need) {
  std::vector<Polygon> polys;
  for (const auto& p : inputs) {
    if (!is_valid_ring(p.outer)) continue;
    Polygon q = p;
    normalize_orientation(q);
    std::erase_if(q.holes, [](const Ring& h) { return !is_valid_ring(h); });
    polys.push_back(std::move(q));
  }
  const int npoly = static_cast<int>(polys.size());
  if (npoly < need || npoly == 0) return {};

  std::vector<Box> poly_box(npoly);
  std::vector<OverlayEdge> edges;
  for (int i = 0; i < npoly; ++i) {
    poly_box[i] = bounding_box(polys[i]);
    for_each_edge(polys[i], [&](Point2 a, Point2 b) {
      if (a == b) return;
      OverlayEdge e{a, b, i, {}, {}};
      e.box.expand(a);
      e.box.expand(b);
      edges.push_back(std::move(e));
    });
  }

  // Sweep over x to find candidate edge pairs.
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return edges[i].box.lo.x < edges[j].box.lo.x; });
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    OverlayEdge& e = edges[order[oi]];
    for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
      OverlayEdge& f = edges[order[oj]];
      if (f.box.lo.x > e.box.hi.x + kEpsGeom) break;
      if (f.poly == e.poly || !e.box.overlaps(f.box, kEpsGeom)) continue;
      intersect_edges(e, f);
    }
  }

  // Split and snap.
  VertexIndex vindex;
  struct SubEdge {
    int u, v, poly;
  };
  std::vector<SubEdge> subs;
  for (auto& e : edges) {
    const Point2 d = e.b - e.a;
    std::sort(e.splits.begin(), e.splits.end(),
              [&](Point2 p, Point2 q) { return dot(p - e.a, d) < dot(q - e.a, d); });
    int prev = vindex.id(e.a);
    auto emit = [&](Point2 p) {
      const int cur = vindex.id(p);
      if (cur != prev) subs.push_back({prev, cur, e.poly});
      prev = cur;
    };
    for (auto p : e.splits) emit(p);
    emit(e.b);
  }
  const auto& pts = vindex.points();

  // Group coincident sub-edges and classify each group once.
  std::unordered_map<std::uint64_t, std::vector<int>> groups;
  groups.reserve(subs.size());
  for (int i = 0; i < static_cast<int>(subs.size()); ++i) {
    const auto u = static_cast<std::uint64_t>(std::min(subs[i].u, subs[i].v));
    const auto v = static_cast<std::uint64_t>(std::max(subs[i].u, subs[i].v));
    groups[(u << 32) | v].push_back(i);
  }

  std::vector<std::pair<int, int>> out_edges;
  std::vector<int> members;
  for (const auto& [k, idx] : groups) {
    const int u = static_cast<int>(k >> 32), v = static_cast<int>(k & 0xffffffffu);
    int left = 0, right = 0;
    members.clear();
    for (int i : idx) {
      members.push_back(subs[i].poly);
      if (subs[i].u == u) ++left; else ++right;
    }
    const Point2 mid = (pts[u] + pts[v]) * 0.5;
    for (int p = 0; p < npoly; ++p) {
      if (std::find(members.begin(), members.end(), p) != members.end()) continue;
      if (!poly_box[p].contains(mid, kEpsGeom)) continue;
      if (point_in_polygon(mid, polys[p]) == Location::inside) {
        ++left;
        ++right;
      }
    }
    const bool cl = left >= need, cr = right >= need;
    if (cl && !cr) out_edges.emplace_back(u, v);
    if (cr && !cl) out_edges.emplace_back(v, u);
  }
  // Deterministic traversal order regardless of hash-map iteration order.
  std::sort(out_edges.begin(), out_edges.end());

  std::vector<std::vector<int>> outgoing(pts.size());
  for (int i = 0; i < static_cast<int>(out_edges.size()); ++i) outgoing[out_edges[i].first].push_back(i);
  std::vector<char> used(out_edges.size(), 0);

  std::vector<Ring> outers, holes;
  for (int start = 0; start < static_cast<int>(out_edges.size()); ++start) {
    if (used[start]) continue;
    Ring ring;
    int cur = start;
    bool closed = false;
    while (true) {
      used[cur] = 1;
      ring.push_back(pts[out_edges[cur].first]);
      const int v = out_edges[cur].second;
      const Point2 back = pts[out_edges[cur].first] - pts[v];
      int best = -1;
      double best_angle = 10.0;
      for (int cand : outgoing[v]) {
        if (used[cand] && cand != start) continue;
        const Point2 d = pts[out_edges[cand].second] - pts[v];
        double cw = std::atan2(cross(d, back), dot(back, d));
        if (cw <= 0) cw += 2.0 * std::numbers::pi;
        if (cw < best_angle) {
          best_angle = cw;
          best = cand;
        }
      }
      if (best < 0) break;
      if (best == start) {
        closed = true;
        break;
      }
      cur = best;
    }
    if (!closed) continue;
    ring = drop_collinear(std::move(ring));
    if (ring.size() < 3) continue;
    const double a = signed_area(ring);
    if (a > kEpsGeom * kEpsGeom) outers.push_back(std::move(ring));
    else if (a < -kEpsGeom * kEpsGeom) holes.push_back(std::move(ring));
  }

  std::vector<Polygon> result(outers.size());
  std::vector<double> outer_area(outers.size());
  std::vector<Box> outer_box(outers.size());
  for (std::size_t i = 0; i < outers.size(); ++i) {
    outer_area[i] = signed_area(outers[i]);
    outer_box[i] = bounding_box(outers[i]);
    result[i].outer = std::move(outers[i]);
  }
  for (auto& h : holes) {
    const Box hb = bounding_box(h);
    int parent = -1;
    for (std::size_t i = 0; i < result.size(); ++i) {
      if (!outer_box[i].overlaps(hb, kEpsGeom)) continue;
      if (parent >= 0 && outer_area[i] >= outer_area[parent]) continue;
      Location loc = Location::boundary;
      for (std::size_t j = 0; j < h.size() && loc == Location::boundary; ++j)
        loc = point_in_ring(h[j], result[i].outer);
      if (loc == Location::boundary) loc = point_in_ring((h[0] + h[1]) * 0.5, result[i].outer);
      if (loc == Location::inside) parent = static_cast<int>(i);
    }
    if (parent >= 0) result[parent].holes.push_back(std::move(h));
  }
  return result;
}

// Connected components of a set of boxes under overlap.
inline std::vector<std::vector<int>> box_components(std::span<const Box> boxes) {
  const int n = static_cast<int>(boxes.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return boxes[i].lo.x < boxes[j].lo.x; });
  for (int oi = 0; oi < n; ++oi)
    for (int oj = oi + 1; oj < n; ++oj) {
      const int i = order[oi], j = order[oj];
      if (boxes[j].lo.x > boxes[i].hi.x + kEpsGeom) break;
      if (boxes[i].overlaps(boxes[j], kEpsGeom)) parent[find(i)] = find(j);
    }
  std::vector<std::vector<int>> comps;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]].push_back(i);
  }
  return comps;
}

}  // namespace detail

// Union of any number of polygons; the result polygons are pairwise disjoint
// and may carry holes.
inline std::vector<Polygon> polygon_union(std::span<const Polygon> polys) {
  std::vector<Box> boxes;
  boxes.reserve(polys.size());
  for (const auto& p : polys) boxes.push_back(bounding_box(p));
  std::vector<Polygon> out;
  for (const auto& comp : detail::box_components(boxes)) {
    if (comp.size() == 1) {
      Polygon p = polys[comp[0]];
      if (!detail::is_valid_ring(p.outer)) continue;
      normalize_orientation(p);
      out.push_back(std::move(p));
      continue;
    }
    std::vector<Polygon> group;
    group.reserve(comp.size());
    for (int i : comp) group.push_back(polys[i]);
    auto merged = detail::overlay(group, 1);
    for (auto& m : merged) out.push_back(std::move(m));
  }
  return out;
}

inline std::vector<Polygon> polygon_intersection(const Polygon& a, const Polygon& b) {
  if (!bounding_box(a).overlaps(bounding_box(b), kEpsGeom)) return {};
  const Polygon both[2] = {a, b};
  return detail::overlay(both, 2);
}

}  // namespace uavlos
