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

// Monte Carlo harness: association episodes with realized throughput, and
// seeded parameter sweeps written as CSV rows.

#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "uavlos/analytic.hpp"
#include "uavlos/assoc.hpp"
#include "uavlos/gridlos.hpp"
#include "uavlos/scene.hpp"
#include "uavlos/scene_io.hpp"
#include "uavlos/shadowcast.hpp"

namespace uavlos {

// proposed: eMBB users by LoS-area throughput, URLLC users by LoS radius.
enum class Scheme { proposed, max_throughput };

inline const char* scheme_name(Scheme s) { return s == Scheme::proposed ? "proposed" : "max_throughput"; }

struct EpisodeConfig {
  int slots = 1;
  int substeps = 20;
  int n_seg = 64;
};

struct SlotMetrics {
  std::uint64_t slot = 0;
  std::vector<AssociationResult> decisions;  // one per user, scene order
  std::vector<bool> start_los;               // LoS to the chosen UAV at slot start
  // Per user and sub-step: served (in range with LoS) and realized rate
  // (eMBB only, 0 otherwise).
  std::vector<std::vector<std::uint8_t>> served;
  std::vector<std::vector<double>> substep_bps;
  std::size_t embb_users = 0, urllc_users = 0;
  double throughput_bps = 0.0;       // mean over eMBB users and sub-steps
  double los_fraction = 0.0;         // share of eMBB sub-steps with service
  double urllc_radius = 0.0;         // mean achieved radius over URLLC users
  double urllc_uninterrupted = 0.0;  // share of URLLC users served on every sub-step
};

struct EpisodeResult {
  Scheme scheme = Scheme::proposed;
  std::vector<SlotMetrics> slots;
  double throughput_bps = 0.0;
  double los_fraction = 0.0;
  double urllc_radius_slot0 = 0.0;
  double urllc_radius_mean = 0.0;
  double urllc_uninterrupted = 0.0;
};

namespace bench {

inline const Uav* find_uav(const Scene& s, EntityId id) {
  for (const auto& u : s.uavs)
    if (u.id == id) return &u;
  return nullptr;
}

inline bool served_at(const Scene& s, const Uav& u, Point2 p) {
  const auto cov = assoc::coverage_disk(u);
  return cov && cov->contains(p) && assoc::los_at(s, u, p);
}

// Radius a URLLC user actually gets from `uav`: its LoS radius, capped by
// the distance to the coverage edge.
inline double achieved_urllc_radius(const Scene& s, const User& user, const Uav& uav, const ShadowMap& map) {
  const auto cov = assoc::coverage_disk(uav);
  if (!cov || map.occluded(user.pos)) return 0.0;
  const double room = std::max(0.0, cov->radius - distance(user.pos, cov->center));
  return std::min(assoc::urllc_radius_for(s, user, map), room);
}

}  // namespace bench

// Shadow maps depend only on buildings and UAV positions, so one set serves
// every slot; pass `maps` to share them between runs on the same scene.
inline EpisodeResult run_episode(Scene scene, Scheme scheme, const EpisodeConfig& cfg = {},
                                 std::span<const ShadowMap> maps = {}) {
  if (cfg.slots < 1 || cfg.substeps < 1) throw InvalidParams("run_episode: slots and substeps must be >= 1");
  std::vector<ShadowMap> own;
  if (maps.empty()) {
    own = assoc::build_all_maps(scene);
    maps = own;
  }
  EpisodeResult out;
  out.scheme = scheme;

  for (int k = 0; k < cfg.slots; ++k) {
    SlotMetrics m;
    m.slot = scene.slot;
    double thr = 0, lit = 0, rad = 0, whole = 0;
    for (const auto& user : scene.users) {
      AssociationResult d;
      if (scheme == Scheme::max_throughput)
        d = assoc::associate_max_throughput(scene, user);
      else if (user.traffic == Traffic::embb)
        d = assoc::associate_embb(scene, user, maps, cfg.n_seg);
      else
        d = assoc::associate_urllc(scene, user, maps);

      const Uav* uav = d.uav_id ? bench::find_uav(scene, *d.uav_id) : nullptr;
      m.start_los.push_back(uav && assoc::los_at(scene, *uav, user.pos));

      int served = 0;
      double sum = 0;
      auto& lit_trace = m.served.emplace_back(static_cast<std::size_t>(cfg.substeps), 0);
      auto& bps_trace = m.substep_bps.emplace_back(static_cast<std::size_t>(cfg.substeps), 0.0);
      if (uav) {
        for (int q = 0; q < cfg.substeps; ++q) {
          const Point2 p = position_at(scene.region, user, (q + 0.5) / cfg.substeps * scene.dt);
          if (!bench::served_at(scene, *uav, p)) continue;
          ++served;
          lit_trace[static_cast<std::size_t>(q)] = 1;
          if (user.traffic != Traffic::embb) continue;
          CounterRng rng(scene.seed, Stream::fading,
                         {scene.slot, user.id, uav->id, static_cast<std::uint64_t>(q)});
          const double h = channel::draw_fading(scene.channel, rng);
          const double dist = distance(Point3{p.x, p.y, 0.0}, uav->pos);
          const double bps = channel::throughput_bps(
              channel::rx_power_dbm(*uav, scene.channel.user_gain_dbi, dist, scene.channel), h, scene.channel);
          bps_trace[static_cast<std::size_t>(q)] = bps;
          sum += bps;
        }
      }
      if (user.traffic == Traffic::embb) {
        ++m.embb_users;
        thr += sum / cfg.substeps;
        lit += static_cast<double>(served) / cfg.substeps;
      } else {
        ++m.urllc_users;
        if (uav) {
          const std::size_t i = static_cast<std::size_t>(uav - scene.uavs.data());
          rad += bench::achieved_urllc_radius(scene, user, *uav, maps[i]);
        }
        whole += served == cfg.substeps;
      }
      m.decisions.push_back(std::move(d));
    }
    if (m.embb_users) {
      m.throughput_bps = thr / m.embb_users;
      m.los_fraction = lit / m.embb_users;
    }
    if (m.urllc_users) {
      m.urllc_radius = rad / m.urllc_users;
      m.urllc_uninterrupted = whole / m.urllc_users;
    }
    out.slots.push_back(std::move(m));
    if (k + 1 < cfg.slots) scene = advance_users(std::move(scene));
  }

  const double n = static_cast<double>(out.slots.size());
  for (const auto& m : out.slots) {
    out.throughput_bps += m.throughput_bps / n;
    out.los_fraction += m.los_fraction / n;
    out.urllc_radius_mean += m.urllc_radius / n;
    out.urllc_uninterrupted += m.urllc_uninterrupted / n;
  }
  out.urllc_radius_slot0 = out.slots.front().urllc_radius;
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

enum class SweepVar { lambda_b, resolution_a, uav_count };

inline const char* sweep_var_name(SweepVar v) {
  switch (v) {
    case SweepVar::lambda_b: return "lambda_b";
    case SweepVar::resolution_a: return "resolution_a";
    case SweepVar::uav_count: return "uav_count";
  }
  return "?";
}

struct SweepSpec {
  SweepVar variable = SweepVar::lambda_b;
  std::vector<double> values;
  int seeds = 100;
  std::uint64_t base_seed = 1;
  SceneParams fixed;
  std::vector<Backend> backends;
  std::vector<Policy> policies;
  double resolution_a = 0.5;  // DA cell size unless the sweep varies it
  int n_seg = 64;
  DaArea da_area = DaArea::visible;
  EpisodeConfig episode;
};

struct SweepRow {
  std::size_t value_index = 0;
  double value = 0.0;
  std::uint64_t seed = 0;
  std::string label;  // backend or policy
  std::string metric;
  double metric_value = 0.0;
  double wall_time_s = 0.0;
};

inline void validate(const SweepSpec& s) {
  if (s.values.empty()) throw InvalidParams("sweep: values must be non-empty");
  if (s.seeds < 1) throw InvalidParams("sweep: seeds must be >= 1");
  if (s.backends.empty() && s.policies.empty()) throw InvalidParams("sweep: nothing to run");
  if (!(s.resolution_a > 0) || s.n_seg < 8) throw InvalidParams("sweep: bad resolution_a or n_seg");
  for (double v : s.values) {
    const bool ok = s.variable == SweepVar::lambda_b       ? v >= 0
                    : s.variable == SweepVar::resolution_a ? v > 0
                                                           : v >= 0 && v == std::floor(v);
    if (!ok) throw InvalidParams("sweep: bad value for " + std::string(sweep_var_name(s.variable)));
  }
  validate(s.fixed);
}

namespace bench {

inline std::optional<Backend> parse_backend(const std::string& s) {
  if (s == "aa" || s == "analytic") return Backend::analytic;
  if (s == "spa" || s == "shadow") return Backend::shadow;
  if (s == "da" || s == "grid") return Backend::grid;
  return std::nullopt;
}

inline std::optional<Policy> parse_policy(const std::string& s) {
  if (s == "embb" || s == "embb_area") return Policy::embb_area;
  if (s == "urllc" || s == "urllc_radius") return Policy::urllc_radius;
  if (s == "maxtp" || s == "max_throughput") return Policy::max_throughput;
  return std::nullopt;
}

inline std::optional<DaArea> parse_da_area(const std::string& s) {
  if (s == "visible") return DaArea::visible;
  if (s == "flood") return DaArea::flood;
  if (s == "count") return DaArea::count;
  return std::nullopt;
}

inline bool has(const std::vector<Backend>& v, Backend b) { return std::find(v.begin(), v.end(), b) != v.end(); }
inline bool has(const std::vector<Policy>& v, Policy p) { return std::find(v.begin(), v.end(), p) != v.end(); }

// Shortest text that reads back to the same double.
inline std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, r.ptr};
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Nearest UAV on the ground plane, ties to the smallest id.
inline std::size_t nearest_uav(const Scene& s, Point2 p) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.uavs.size(); ++i) {
    const double a = distance(p, s.uavs[i].pos.ground()), b = distance(p, s.uavs[best].pos.ground());
    if (a < b || (a == b && s.uavs[i].id < s.uavs[best].id)) best = i;
  }
  return best;
}

inline double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

struct PerUser {
  std::vector<double> area, radius;
};

// Means over users whose SPA figure is positive.
inline double mean_rel_diff(const std::vector<double>& x, const std::vector<double>& ref) {
  double s = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (ref[i] > 0) s += std::abs(x[i] - ref[i]) / ref[i], ++n;
  return n ? s / n : 0.0;
}

inline double mean_ratio(const std::vector<double>& x, const std::vector<double>& ref) {
  double s = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (ref[i] > 0) s += x[i] / ref[i], ++n;
  return n ? s / n : 0.0;
}

inline std::vector<SweepRow> run_task(const SweepSpec& spec, std::size_t vi, std::uint64_t seed) {
  const double v = spec.values[vi];
  SceneParams p = spec.fixed;
  double cell = spec.resolution_a;
  switch (spec.variable) {
    case SweepVar::lambda_b: p.lambda_b = v; break;
    case SweepVar::resolution_a: cell = v; break;
    case SweepVar::uav_count: p.uav_count = static_cast<int>(v); break;
  }
  const Scene s = generate_scene(p, seed);
  std::vector<SweepRow> rows;
  auto emit = [&](const std::string& label, const std::string& metric, double x, double t) {
    rows.push_back({vi, v, seed, label, metric, x, t});
  };

  if (!spec.backends.empty() && !s.uavs.empty()) {
    using Clock = std::chrono::steady_clock;
    std::vector<std::size_t> target;
    for (const auto& u : s.users) target.push_back(nearest_uav(s, u.pos));

    // SPA always runs: it is the reference for the cross-check rows.
    PerUser spa;
    auto t0 = Clock::now();
    {
      const double margin = shadow::default_margin(s);
      std::vector<std::optional<ShadowMap>> maps(s.uavs.size());
      for (std::size_t i = 0; i < s.users.size(); ++i) {
        const User& u = s.users[i];
        auto& m = maps[target[i]];
        if (!m) m = shadow::build_shadow_map(s, s.uavs[target[i]], margin);
        const double rg = u.speed * s.dt;
        spa.area.push_back(shadow::embb_area_spa(*m, u.pos, rg, spec.n_seg));
        spa.radius.push_back(shadow::urllc_radius_spa(*m, u.pos, rg));
      }
    }
    const double t_spa = seconds_since(t0);
    if (has(spec.backends, Backend::shadow)) {
      emit("spa", "embb_area", mean(spa.area), t_spa);
      emit("spa", "urllc_radius", mean(spa.radius), t_spa);
    }

    if (has(spec.backends, Backend::grid)) {
      PerUser da;
      t0 = Clock::now();
      for (std::size_t i = 0; i < s.users.size(); ++i) {
        const User& u = s.users[i];
        const double rg = u.speed * s.dt;
        const LosGrid g = grid::build_grid(s, s.uavs[target[i]], u.pos, rg, cell);
        da.area.push_back(grid::embb_area_da(g, rg, spec.da_area));
        da.radius.push_back(grid::urllc_radius_da(g, rg));
      }
      const double t = seconds_since(t0);
      emit("da", "embb_area", mean(da.area), t);
      emit("da", "urllc_radius", mean(da.radius), t);
      emit("da", "rel_diff_area", mean_rel_diff(da.area, spa.area), t);
      emit("da", "rel_diff_radius", mean_rel_diff(da.radius, spa.radius), t);
    }

    if (has(spec.backends, Backend::analytic)) {
      // Both width conventions, so their gap to SPA can be told apart.
      for (const auto mode : {analytic::WidthMode::mean, analytic::WidthMode::averaged}) {
        PerUser aa;
        t0 = Clock::now();
        const auto st = analytic::blockage_stats(s);
        for (std::size_t i = 0; i < s.users.size(); ++i) {
          const User& u = s.users[i];
          const Uav& k = s.uavs[target[i]];
          const auto r = analytic::evaluate(st, distance(u.pos, k.pos.ground()), k.pos.h, u.speed * s.dt, mode,
                                            p.l_min, p.l_max);
          aa.area.push_back(r.embb_area);
          aa.radius.push_back(r.urllc_radius);
        }
        const double t = seconds_since(t0);
        const std::string sfx = mode == analytic::WidthMode::mean ? "" : "_wavg";
        emit("aa", "embb_area" + sfx, mean(aa.area), t);
        emit("aa", "urllc_radius" + sfx, mean(aa.radius), t);
        emit("aa", "ratio_area" + sfx, mean_ratio(aa.area, spa.area), t);
        emit("aa", "ratio_radius" + sfx, mean_ratio(aa.radius, spa.radius), t);
      }
    }
  }

  if (!spec.policies.empty()) {
    const bool proposed = has(spec.policies, Policy::embb_area) || has(spec.policies, Policy::urllc_radius);
    std::vector<ShadowMap> maps = assoc::build_all_maps(s);
    auto emit_episode = [&](const std::string& label, const EpisodeResult& r, double t, bool embb, bool urllc) {
      if (embb) {
        emit(label, "throughput_bps", r.throughput_bps, t);
        emit(label, "los_fraction", r.los_fraction, t);
      }
      if (urllc) {
        emit(label, "urllc_radius_slot0", r.urllc_radius_slot0, t);
        emit(label, "urllc_radius_mean", r.urllc_radius_mean, t);
        emit(label, "urllc_uninterrupted", r.urllc_uninterrupted, t);
      }
    };
    if (proposed) {
      const auto t0 = std::chrono::steady_clock::now();
      const EpisodeResult r = run_episode(s, Scheme::proposed, spec.episode, maps);
      const double t = seconds_since(t0);
      if (has(spec.policies, Policy::embb_area)) emit_episode("embb_area", r, t, true, false);
      if (has(spec.policies, Policy::urllc_radius)) emit_episode("urllc_radius", r, t, false, true);
    }
    if (has(spec.policies, Policy::max_throughput)) {
      const auto t0 = std::chrono::steady_clock::now();
      const EpisodeResult r = run_episode(s, Scheme::max_throughput, spec.episode, maps);
      emit_episode("max_throughput", r, seconds_since(t0), true, true);
    }
  }
  return rows;
}

inline unsigned thread_count() {
  if (const char* e = std::getenv("UAVLOS_THREADS")) {
    const int n = std::atoi(e);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace bench

// Rows come back sorted by (value, seed, label, metric), whatever the thread
// count.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 0) {
  validate(spec);
  if (threads == 0) threads = bench::thread_count();
  const std::size_t n_tasks = spec.values.size() * static_cast<std::size_t>(spec.seeds);
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_tasks));

  std::vector<std::vector<SweepRow>> out(n_tasks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto work = [&] {
    for (std::size_t t; (t = next++) < n_tasks;) {
      try {
        const std::size_t vi = t / static_cast<std::size_t>(spec.seeds);
        const std::uint64_t seed = spec.base_seed + t % static_cast<std::size_t>(spec.seeds);
        out[t] = bench::run_task(spec, vi, seed);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepRow> rows;
  for (auto& v : out) rows.insert(rows.end(), v.begin(), v.end());
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.value_index, a.seed, a.label, a.metric) < std::tie(b.value_index, b.seed, b.label, b.metric);
  });
  return rows;
}

inline constexpr const char* kCsvHeader = "variable,value,seed,backend_or_policy,metric,metric_value,wall_time_s";

inline std::string to_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows, bool mask_timing = false) {
  std::ostringstream o;
  o << "# uavlos-sweep v1\n";
  o << "# seeds=" << spec.seeds << " base_seed=" << spec.base_seed << " da_area=" << da_area_name(spec.da_area)
    << " resolution_a=" << bench::fmt(spec.resolution_a) << " n_seg=" << spec.n_seg
    << " slots=" << spec.episode.slots << " substeps=" << spec.episode.substeps << "\n";
  o << "# backends are evaluated per user against the nearest UAV; area/radius rows are means over users\n";
  o << "# rel_diff_*: mean |da-spa|/spa, ratio_*: mean aa/spa, both over users with spa > 0\n";
  o << "# aa *_wavg metrics average over the building width distribution, the rest use the mean width\n";
  o << kCsvHeader << "\n";
  const std::string var = sweep_var_name(spec.variable);
  for (const auto& r : rows)
    o << var << ',' << bench::fmt(r.value) << ',' << r.seed << ',' << r.label << ',' << r.metric << ','
      << bench::fmt(r.metric_value) << ',' << (mask_timing ? std::string("-") : bench::fmt(r.wall_time_s)) << "\n";
  return o.str();
}

inline void write_sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows,
                            const std::filesystem::path& path) {
  write_text_file(path, to_csv(spec, rows));
}

inline nlohmann::json sweep_spec_to_json(const SweepSpec& s) {
  nlohmann::json backends = nlohmann::json::array(), policies = nlohmann::json::array();
  for (auto b : s.backends) backends.push_back(backend_name(b));
  for (auto p : s.policies) policies.push_back(policy_name(p));
  return {{"variable", sweep_var_name(s.variable)},
          {"values", s.values},
          {"seeds", s.seeds},
          {"base_seed", s.base_seed},
          {"backends", backends},
          {"policies", policies},
          {"resolution_a", s.resolution_a},
          {"n_seg", s.n_seg},
          {"da_area", da_area_name(s.da_area)},
          {"slots", s.episode.slots},
          {"substeps", s.episode.substeps},
          {"scene", params_to_json(s.fixed)}};
}

inline SweepSpec sweep_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("sweep spec must be a JSON object");
  detail::JsonReader r(j, "");
  SweepSpec s;
  auto str = [&](const char* key) -> std::string {
    const auto& v = r.child(key);
    if (!v.is_string()) throw ParseError("expected a string", 0, key);
    return v.get<std::string>();
  };
  const std::string var = str("variable");
  if (var == "lambda_b") s.variable = SweepVar::lambda_b;
  else if (var == "resolution_a") s.variable = SweepVar::resolution_a;
  else if (var == "uav_count") s.variable = SweepVar::uav_count;
  else throw ParseError("unknown sweep variable '" + var + "'", 0, "variable");

  const auto& vals = r.child("values");
  if (!vals.is_array() || vals.empty()) throw ParseError("expected a non-empty array", 0, "values");
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!vals[i].is_number()) throw ParseError("expected a number", 0, "values[" + std::to_string(i) + "]");
    s.values.push_back(vals[i].get<double>());
  }
  s.seeds = static_cast<int>(r.u64("seeds", static_cast<std::uint64_t>(s.seeds)));
  s.base_seed = r.u64("base_seed", s.base_seed);
  auto names = [&](const char* key, auto parse, auto& outv) {
    if (!r.has(key)) return;
    const auto& a = r.child(key);
    if (!a.is_array()) throw ParseError("expected an array", 0, key);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string at = std::string(key) + "[" + std::to_string(i) + "]";
      if (!a[i].is_string()) throw ParseError("expected a string", 0, at);
      const auto x = parse(a[i].template get<std::string>());
      if (!x) throw ParseError("unknown name '" + a[i].template get<std::string>() + "'", 0, at);
      outv.push_back(*x);
    }
  };
  names("backends", bench::parse_backend, s.backends);
  names("policies", bench::parse_policy, s.policies);
  s.resolution_a = r.num("resolution_a", s.resolution_a);
  s.n_seg = static_cast<int>(r.u64("n_seg", static_cast<std::uint64_t>(s.n_seg)));
  if (r.has("da_area")) {
    const auto m = bench::parse_da_area(str("da_area"));
    if (!m) throw ParseError("unknown DA area mode", 0, "da_area");
    s.da_area = *m;
  }
  s.episode.slots = static_cast<int>(r.u64("slots", static_cast<std::uint64_t>(s.episode.slots)));
  s.episode.substeps = static_cast<int>(r.u64("substeps", static_cast<std::uint64_t>(s.episode.substeps)));
  s.episode.n_seg = s.n_seg;
  if (r.has("scene")) s.fixed = params_from_json(r.child("scene"), "scene");
  try {
    validate(s);
  } catch (const InvalidParams& e) {
    throw ParseError(e.what());
  }
  return s;
}

inline SweepSpec load_sweep_spec(const std::filesystem::path& path) {
  return sweep_spec_from_json(parse_json_text(read_text_file(path)));
}

}  // namespace uavlos
