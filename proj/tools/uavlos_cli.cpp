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

// uavlos command line: scene generation, per-user LoS queries, association,
// sweeps and plots. Thread count for sweeps comes from UAVLOS_THREADS.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "uavlos/analytic.hpp"
#include "uavlos/assoc.hpp"
#include "uavlos/bench.hpp"
#include "uavlos/gridlos.hpp"
#include "uavlos/plot.hpp"
#include "uavlos/scene.hpp"
#include "uavlos/scene_io.hpp"
#include "uavlos/shadowcast.hpp"

namespace {

using namespace uavlos;
using bench::fmt;

struct Query {
  std::string scene;
  EntityId user = 0, uav = 0;
  std::string backend = "spa";
  double cell = 0.5;
  int n_seg = 64;
  std::string da_area = "visible";
  std::string width = "mean";
};

Scene load_with_seed(const std::string& path, const std::optional<std::uint64_t>& seed) {
  Scene s = load_scene(path);
  if (seed) s.seed = *seed;
  return s;
}

template <class T>
const T& by_id(const std::vector<T>& v, EntityId id, const char* what) {
  for (const auto& x : v)
    if (x.id == id) return x;
  throw InvalidParams(std::string("no ") + what + " with id " + std::to_string(id));
}

// Area or radius for one (user, UAV) pair; prints value and elapsed seconds.
int run_query(const Query& q, const std::optional<std::uint64_t>& seed, bool area) {
  const Scene s = load_with_seed(q.scene, seed);
  const User& user = by_id(s.users, q.user, "user");
  const Uav& uav = by_id(s.uavs, q.uav, "uav");
  const auto backend = bench::parse_backend(q.backend);
  if (!backend) throw InvalidParams("unknown backend '" + q.backend + "'");
  const double rg = user.speed * s.dt;
  const auto t0 = std::chrono::steady_clock::now();
  double v = 0;
  switch (*backend) {
    case Backend::analytic: {
      const auto mode = q.width == "averaged" ? analytic::WidthMode::averaged : analytic::WidthMode::mean;
      const double l_min = s.blockage ? s.blockage->l_min : 10.0, l_max = s.blockage ? s.blockage->l_max : 20.0;
      const auto r = analytic::evaluate(analytic::blockage_stats(s), distance(user.pos, uav.pos.ground()), uav.pos.h,
                                        rg, mode, l_min, l_max);
      v = area ? r.embb_area : r.urllc_radius;
      break;
    }
    case Backend::shadow: {
      const ShadowMap m = shadow::build_shadow_map(s, uav);
      v = area ? shadow::embb_area_spa(m, user.pos, rg, q.n_seg) : shadow::urllc_radius_spa(m, user.pos, rg);
      break;
    }
    case Backend::grid: {
      const auto mode = bench::parse_da_area(q.da_area);
      if (!mode) throw InvalidParams("unknown DA area mode '" + q.da_area + "'");
      const LosGrid g = grid::build_grid(s, uav, user.pos, rg, q.cell);
      v = area ? grid::embb_area_da(g, rg, *mode) : grid::urllc_radius_da(g, rg);
      break;
    }
  }
  std::cout << (area ? "embb_area," : "urllc_radius,") << backend_name(*backend) << ',' << fmt(v) << ','
            << fmt(bench::seconds_since(t0)) << '\n';
  return 0;
}

int run_associate(const std::string& path, const std::string& policy, const std::optional<std::uint64_t>& seed,
                  int n_seg) {
  const Scene s = load_with_seed(path, seed);
  std::optional<Policy> fixed;
  if (policy != "traffic") {
    fixed = bench::parse_policy(policy);
    if (!fixed) throw InvalidParams("unknown policy '" + policy + "'");
  }
  const auto maps = assoc::build_all_maps(s);
  std::cout << "user_id,policy,uav_id,score";
  for (const auto& u : s.uavs) std::cout << ",uav" << u.id;
  std::cout << '\n';
  for (const auto& user : s.users) {
    const Policy p = fixed ? *fixed : user.traffic == Traffic::embb ? Policy::embb_area : Policy::urllc_radius;
    AssociationResult r;
    switch (p) {
      case Policy::embb_area: r = assoc::associate_embb(s, user, maps, n_seg); break;
      case Policy::urllc_radius: r = assoc::associate_urllc(s, user, maps); break;
      case Policy::max_throughput: r = assoc::associate_max_throughput(s, user); break;
    }
    std::cout << user.id << ',' << policy_name(p) << ',' << (r.uav_id ? std::to_string(*r.uav_id) : "") << ','
              << fmt(r.score);
    // Infeasible candidates are left blank.
    for (const auto& e : r.per_uav) std::cout << ',' << (e.feasible ? fmt(e.score) : "");
    std::cout << '\n';
  }
  return 0;
}

// Timing table: every backend over every (user, UAV) pair of one scene.
int run_bench(const std::string& path, const std::optional<std::uint64_t>& seed, double cell, int n_seg) {
  const Scene s = load_with_seed(path, seed);
  std::printf("%-8s %8s %14s %14s %12s\n", "backend", "pairs", "mean_area", "mean_radius", "seconds");
  const double n = static_cast<double>(s.users.size() * s.uavs.size());
  auto row = [&](const char* name, double area, double radius, double secs) {
    std::printf("%-8s %8.0f %14.4f %14.4f %12.6f\n", name, n, n ? area / n : 0.0, n ? radius / n : 0.0, secs);
  };
  using Clock = std::chrono::steady_clock;

  auto t0 = Clock::now();
  double a = 0, r = 0;
  const auto st = analytic::blockage_stats(s);
  const double l_min = s.blockage ? s.blockage->l_min : 10.0, l_max = s.blockage ? s.blockage->l_max : 20.0;
  for (const auto& k : s.uavs)
    for (const auto& u : s.users) {
      const auto x = analytic::evaluate(st, distance(u.pos, k.pos.ground()), k.pos.h, u.speed * s.dt,
                                        analytic::WidthMode::mean, l_min, l_max);
      a += x.embb_area;
      r += x.urllc_radius;
    }
  row("aa", a, r, bench::seconds_since(t0));

  t0 = Clock::now();
  a = r = 0;
  for (const auto& m : assoc::build_all_maps(s))
    for (const auto& u : s.users) {
      a += shadow::embb_area_spa(m, u.pos, u.speed * s.dt, n_seg);
      r += shadow::urllc_radius_spa(m, u.pos, u.speed * s.dt);
    }
  row("spa", a, r, bench::seconds_since(t0));

  t0 = Clock::now();
  a = r = 0;
  for (const auto& k : s.uavs)
    for (const auto& u : s.users) {
      const LosGrid g = grid::build_grid(s, k, u.pos, u.speed * s.dt, cell);
      a += grid::embb_area_da(g, u.speed * s.dt);
      r += grid::urllc_radius_da(g, u.speed * s.dt);
    }
  row("da", a, r, bench::seconds_since(t0));
  return 0;
}

// Shadow polygons of one UAV as JSON rings.
int run_shadows(const std::string& path, EntityId uav_id, const std::optional<std::uint64_t>& seed) {
  const Scene s = load_with_seed(path, seed);
  const ShadowMap m = shadow::build_shadow_map(s, by_id(s.uavs, uav_id, "uav"));
  nlohmann::json out = nlohmann::json::array();
  auto ring = [](const Ring& r) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : r) j.push_back({p.x, p.y});
    return j;
  };
  for (const auto& poly : m.shadows) {
    nlohmann::json holes = nlohmann::json::array();
    for (const auto& h : poly.holes) holes.push_back(ring(h));
    out.push_back({{"outer", ring(poly.outer)}, {"holes", holes}, {"area", polygon_area(poly)}});
  }
  std::cout << nlohmann::json{{"uav_id", uav_id}, {"shadows", out}}.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uavlos: LoS regions and association for mmWave UAV networks"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  auto add_seed = [&](CLI::App* c, const char* help) { c->add_option("--seed", seed, help); };

  auto* gen = app.add_subcommand("generate", "draw a random scene");
  std::string params_path, out_path;
  gen->add_option("--params", params_path, "scene parameters (JSON); defaults when omitted")->check(CLI::ExistingFile);
  gen->add_option("--out", out_path, "scene file to write (stdout when omitted)");
  add_seed(gen, "scene seed (default 1)");

  Query q;
  auto add_query = [&](CLI::App* c) {
    c->add_option("--scene", q.scene, "scene file")->required()->check(CLI::ExistingFile);
    c->add_option("--user", q.user, "user id")->required();
    c->add_option("--uav", q.uav, "UAV id")->required();
    c->add_option("--backend", q.backend, "aa, spa or da")->check(CLI::IsMember({"aa", "spa", "da"}));
    c->add_option("--cell", q.cell, "DA cell size in metres");
    c->add_option("--nseg", q.n_seg, "segments of the mobility-disk polygon");
    c->add_option("--da-area", q.da_area, "DA area rule")->check(CLI::IsMember({"visible", "flood", "count"}));
    c->add_option("--width", q.width, "AA width convention")->check(CLI::IsMember({"mean", "averaged"}));
    add_seed(c, "override the scene seed");
  };
  auto* area = app.add_subcommand("area", "eMBB LoS area of one user towards one UAV");
  add_query(area);
  auto* radius = app.add_subcommand("radius", "URLLC LoS radius of one user towards one UAV");
  add_query(radius);

  auto* as = app.add_subcommand("associate", "per-user association decisions as CSV");
  std::string scene_path, policy = "traffic";
  int n_seg = 64;
  as->add_option("--scene", scene_path, "scene file")->required()->check(CLI::ExistingFile);
  as->add_option("--policy", policy, "embb, urllc, maxtp, or traffic (by each user's class)")
      ->check(CLI::IsMember({"embb", "urllc", "maxtp", "traffic"}));
  as->add_option("--nseg", n_seg, "segments of the mobility-disk polygon");
  add_seed(as, "override the scene seed");

  auto* sw = app.add_subcommand("sweep", "run a parameter sweep and write CSV rows");
  std::string spec_path;
  std::optional<int> seeds;
  sw->add_option("--spec", spec_path, "sweep spec (JSON)")->required()->check(CLI::ExistingFile);
  sw->add_option("--out", out_path, "CSV file")->required();
  sw->add_option("--seeds", seeds, "override the seed count");
  add_seed(sw, "override the base seed");

  auto* pl = app.add_subcommand("plot", "render a sweep CSV as SVG");
  std::string in_path, metric;
  pl->add_option("--in", in_path, "sweep CSV")->required()->check(CLI::ExistingFile);
  pl->add_option("--out", out_path, "SVG file")->required();
  pl->add_option("--metric", metric, "metric to plot (first in file by default)");
  add_seed(pl, "unused; accepted for uniformity");

  auto* be = app.add_subcommand("bench", "time all backends on one scene");
  double cell = 0.5;
  be->add_option("--scene", scene_path, "scene file")->required()->check(CLI::ExistingFile);
  be->add_option("--cell", cell, "DA cell size in metres");
  be->add_option("--nseg", n_seg, "segments of the mobility-disk polygon");
  add_seed(be, "override the scene seed");

  auto* sh = app.add_subcommand("shadows", "shadow polygons of one UAV as JSON");
  EntityId uav_id = 0;
  sh->add_option("--scene", scene_path, "scene file")->required()->check(CLI::ExistingFile);
  sh->add_option("--uav", uav_id, "UAV id")->required();
  add_seed(sh, "override the scene seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const SceneParams p = params_path.empty() ? SceneParams{} : params_from_json(parse_json_text(read_text_file(params_path)));
      const Scene s = generate_scene(p, seed.value_or(1));
      if (out_path.empty())
        std::cout << scene_to_json(s).dump(2) << '\n';
      else
        save_scene(s, out_path);
      return 0;
    }
    if (area->parsed()) return run_query(q, seed, true);
    if (radius->parsed()) return run_query(q, seed, false);
    if (as->parsed()) return run_associate(scene_path, policy, seed, n_seg);
    if (sw->parsed()) {
      SweepSpec spec = load_sweep_spec(spec_path);
      if (seeds) spec.seeds = *seeds;
      if (seed) spec.base_seed = *seed;
      const auto rows = run_sweep(spec);
      write_sweep_csv(spec, rows, out_path);
      std::cerr << rows.size() << " rows -> " << out_path << '\n';
      return 0;
    }
    if (pl->parsed()) {
      const PlotData d = emit_plot(in_path, out_path, metric);
      std::cerr << d.series.size() << " series of " << d.metric << " -> " << out_path << '\n';
      return 0;
    }
    if (be->parsed()) return run_bench(scene_path, seed, cell, n_seg);
    if (sh->parsed()) return run_shadows(scene_path, uav_id, seed);
  } catch (const uavlos::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
