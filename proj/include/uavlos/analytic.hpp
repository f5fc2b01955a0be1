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

// Closed-form backend (AA). Buildings are a PPP of rectangles with Rayleigh
// heights; a link of 2D length a is in LoS with probability
// exp(-(zeta a + tau) / xi), where xi is the chance that a building cutting
// the 2D projection is tall enough to cut the 3D link.

#pragma once

#include <cmath>
#include <numbers>

#include "uavlos/error.hpp"
#include "uavlos/scene.hpp"

namespace uavlos {

struct BlockageStats {
  double lambda_b = 0.0;
  double e_w = 15.0;
  double e_l = 15.0;
  double gamma = 7.63;
  double zeta = 0.0;  // 2 lambda (E[w] + E[l]) / pi
  double tau = 0.0;   // lambda E[w] E[l]

  static BlockageStats make(double lambda_b, double e_w, double e_l, double gamma) {
    if (!(lambda_b >= 0 && e_w > 0 && e_l > 0 && gamma > 0)) throw InvalidParams("blockage stats out of range");
    BlockageStats s{lambda_b, e_w, e_l, gamma, 0.0, 0.0};
    s.zeta = 2.0 * lambda_b * (e_w + e_l) / std::numbers::pi;
    s.tau = lambda_b * e_w * e_l;
    return s;
  }
};

struct LinkGeom {
  double a_k = 0.0;  // 2D link length
  double h_k = 0.0;  // UAV height
  double w = 15.0;   // representative building width
};

namespace analytic {

inline double xi(const LinkGeom& link, double gamma) {
  if (!(link.a_k > 0 && link.h_k > 0 && link.w > 0 && gamma > 0)) throw InvalidParams("xi: non-positive input");
  const double s = link.h_k / (2.0 * std::numbers::sqrt2 * link.a_k * gamma);
  const double hi = link.w * s;
  const double lo = (link.w - 2.0 * link.a_k) * s;
  // Both arguments large and positive: the erfc difference keeps precision.
  const double bracket = lo > 0 ? std::erfc(lo) - std::erfc(hi) : std::erf(hi) - std::erf(lo);
  return std::sqrt(std::numbers::pi / 2.0) * (gamma / link.h_k) * bracket;
}

// xi averaged over w ~ U(l_min, l_max) (composite Simpson, 64 panels).
inline double xi_width_averaged(double a_k, double h_k, double l_min, double l_max, double gamma) {
  if (l_max <= l_min) return xi({a_k, h_k, l_min}, gamma);
  constexpr int n = 64;
  const double step = (l_max - l_min) / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double c = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += c * xi({a_k, h_k, l_min + i * step}, gamma);
  }
  return sum * step / 3.0 / (l_max - l_min);
}

inline double los_probability(double a_k, const BlockageStats& st, double xi_val) {
  if (st.lambda_b == 0.0) return 1.0;
  if (!(xi_val > 0.0)) return 0.0;
  return std::exp(-(st.zeta / xi_val * a_k + st.tau / xi_val));
}

// Expected LoS area before the cap at pi r_g^2.
inline double embb_area_unclamped(const BlockageStats& st, double xi_val) {
  const double z = st.zeta / xi_val;
  return 2.0 * std::numbers::pi * std::exp(-st.tau / xi_val) / (z * z);
}

inline double embb_area(const BlockageStats& st, double xi_val, double r_g) {
  if (!(r_g >= 0)) throw InvalidParams("embb_area: negative radius");
  const double cap = std::numbers::pi * r_g * r_g;
  if (r_g == 0.0) return 0.0;
  if (st.lambda_b == 0.0) return cap;
  if (!(xi_val > 0.0)) return 0.0;
  return std::min(embb_area_unclamped(st, xi_val), cap);
}

inline double urllc_radius_unclamped(const BlockageStats& st, double xi_val) {
  return std::sqrt(xi_val) / std::sqrt(2.0 * std::numbers::pi * st.lambda_b);
}

inline double urllc_radius(const BlockageStats& st, double xi_val, double r_g) {
  if (!(r_g >= 0)) throw InvalidParams("urllc_radius: negative radius");
  if (st.lambda_b == 0.0) return r_g;
  if (!(xi_val > 0.0)) return 0.0;
  return std::min(urllc_radius_unclamped(st, xi_val), r_g);
}

enum class WidthMode { mean, averaged };

struct Report {
  double xi = 0.0;
  double embb_area = 0.0;
  double urllc_radius = 0.0;
};

// AA figures for a user at 2D distance a_k from a UAV at height h_k.
inline Report evaluate(const BlockageStats& st, double a_k, double h_k, double r_g, WidthMode mode,
                       double l_min, double l_max) {
  Report r;
  // A user exactly below the UAV has no 2D link; nudge to keep xi defined.
  const double a = std::max(a_k, 1e-6);
  r.xi = mode == WidthMode::mean ? xi({a, h_k, st.e_w}, st.gamma)
                                 : xi_width_averaged(a, h_k, l_min, l_max, st.gamma);
  r.embb_area = embb_area(st, r.xi, r_g);
  r.urllc_radius = urllc_radius(st, r.xi, r_g);
  return r;
}

// Statistics for a scene: the generating parameters when recorded, otherwise
// moment estimates from the buildings (Rayleigh scale by maximum likelihood).
inline BlockageStats blockage_stats(const Scene& s) {
  if (s.blockage) {
    const double m = 0.5 * (s.blockage->l_min + s.blockage->l_max);
    return BlockageStats::make(s.blockage->lambda_b, m, m, s.blockage->gamma);
  }
  if (s.buildings.empty()) return BlockageStats::make(0.0, 15.0, 15.0, 7.63);
  double sw = 0, sl = 0, sh2 = 0;
  for (const auto& b : s.buildings) {
    sw += b.footprint.wid;
    sl += b.footprint.len;
    sh2 += b.footprint.height * b.footprint.height;
  }
  const double n = static_cast<double>(s.buildings.size());
  return BlockageStats::make(n / s.region.area(), sw / n, sl / n, std::sqrt(sh2 / (2.0 * n)));
}

}  // namespace analytic
}  // namespace uavlos
