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

// Scenario files (JSON). Doubles are written in shortest round-trip form, so
// load_scene(save_scene(s)) == s exactly.

#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"

#include "uavlos/error.hpp"
#include "uavlos/scene.hpp"

namespace uavlos {
namespace detail {

using json = nlohmann::json;

inline int line_of_offset(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

class JsonReader {
 public:
  JsonReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json& child(const std::string& key) const {
    if (!j_.is_object() || !j_.contains(key)) throw ParseError("missing required key", 0, at(key));
    return j_.at(key);
  }
  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

  double num(const std::string& key) const { return to_num(child(key), at(key)); }
  double num(const std::string& key, double fallback) const { return has(key) ? num(key) : fallback; }

  double positive(const std::string& key) const {
    const double v = num(key);
    if (!(v > 0)) throw ParseError("must be positive", 0, at(key));
    return v;
  }
  double non_negative(const std::string& key, double fallback) const {
    const double v = num(key, fallback);
    if (!(v >= 0)) throw ParseError("must be non-negative", 0, at(key));
    return v;
  }

  std::uint64_t u64(const std::string& key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const json& v = child(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      throw ParseError("expected a non-negative integer", 0, at(key));
    return v.get<std::uint64_t>();
  }

  bool flag(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    if (!child(key).is_boolean()) throw ParseError("expected true or false", 0, at(key));
    return child(key).get<bool>();
  }

  static double to_num(const json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      if (s == "inf") return std::numeric_limits<double>::infinity();
    }
    throw ParseError("expected a number", 0, where);
  }

 private:
  const json& j_;
  std::string path_;
};

inline json num_to_json(double v) { return std::isinf(v) && v > 0 ? json("inf") : json(v); }

}  // namespace detail

inline nlohmann::json channel_to_json(const ChannelParams& c) {
  using detail::num_to_json;
  return {{"alpha", c.alpha},
          {"beta", c.beta},
          {"bandwidth_hz", c.bandwidth_hz},
          {"noise_figure_db", c.noise_figure_db},
          {"rician_k", num_to_json(c.rician_k)},
          {"carrier_ghz", c.carrier_ghz},
          {"user_gain_dbi", c.user_gain_dbi}};
}

inline ChannelParams channel_from_json(const nlohmann::json& j, const std::string& path) {
  detail::JsonReader r(j, path);
  ChannelParams c;
  c.alpha = r.num("alpha", c.alpha);
  c.beta = r.num("beta", c.beta);
  c.bandwidth_hz = r.num("bandwidth_hz", c.bandwidth_hz);
  c.noise_figure_db = r.num("noise_figure_db", c.noise_figure_db);
  c.rician_k = r.num("rician_k", c.rician_k);
  c.carrier_ghz = r.num("carrier_ghz", c.carrier_ghz);
  c.user_gain_dbi = r.num("user_gain_dbi", c.user_gain_dbi);
  try {
    channel::validate(c);
  } catch (const InvalidParams& e) {
    throw ParseError(e.what(), 0, path);
  }
  return c;
}

inline nlohmann::json scene_to_json(const Scene& s) {
  using json = nlohmann::json;
  json j;
  j["format"] = "uavlos-scene/1";
  j["region"] = {{"x_min", s.region.x_min}, {"x_max", s.region.x_max}, {"y_min", s.region.y_min},
                 {"y_max", s.region.y_max}};
  j["dt"] = s.dt;
  j["seed"] = s.seed;
  j["slot"] = s.slot;
  j["mobility"] = {{"v_min", s.mobility.v_min},
                   {"v_max", s.mobility.v_max},
                   {"redraw_speed", s.mobility.redraw_speed},
                   {"redraw_heading", s.mobility.redraw_heading}};
  j["channel"] = channel_to_json(s.channel);
  if (s.blockage)
    j["blockage"] = {{"lambda_b", s.blockage->lambda_b},
                     {"l_min", s.blockage->l_min},
                     {"l_max", s.blockage->l_max},
                     {"gamma", s.blockage->gamma}};
  json b = json::array();
  for (const auto& x : s.buildings) {
    const Cuboid& c = x.footprint;
    b.push_back({{"cx", c.cx}, {"cy", c.cy}, {"len", c.len}, {"wid", c.wid}, {"height", c.height}, {"yaw", c.yaw}});
  }
  j["buildings"] = std::move(b);
  json u = json::array();
  for (const auto& x : s.uavs)
    u.push_back({{"id", x.id},
                 {"x", x.pos.x},
                 {"y", x.pos.y},
                 {"h", x.pos.h},
                 {"range", x.range},
                 {"tx_power_dbm", x.tx_power_dbm},
                 {"gain_dbi", x.gain_dbi}});
  j["uavs"] = std::move(u);
  json g = json::array();
  for (const auto& x : s.users)
    g.push_back({{"id", x.id},
                 {"x", x.pos.x},
                 {"y", x.pos.y},
                 {"speed", x.speed},
                 {"heading", x.heading},
                 {"traffic", x.traffic == Traffic::urllc ? "urllc" : "embb"}});
  j["users"] = std::move(g);
  return j;
}

inline Scene scene_from_json(const nlohmann::json& j) {
  using detail::JsonReader;
  if (!j.is_object()) throw ParseError("scene must be a JSON object", 1);
  JsonReader top(j, "");
  Scene s;

  JsonReader reg(top.child("region"), "region");
  s.region = {reg.num("x_min"), reg.num("x_max"), reg.num("y_min"), reg.num("y_max")};
  if (!s.region.valid()) throw ParseError("region must have x_max > x_min and y_max > y_min", 0, "region");
  s.dt = top.positive("dt");
  s.seed = top.u64("seed", 0);
  s.slot = top.u64("slot", 0);

  if (top.has("mobility")) {
    JsonReader m(top.child("mobility"), "mobility");
    s.mobility.v_min = m.non_negative("v_min", s.mobility.v_min);
    s.mobility.v_max = m.non_negative("v_max", s.mobility.v_max);
    if (s.mobility.v_max < s.mobility.v_min) throw ParseError("v_max below v_min", 0, "mobility.v_max");
    s.mobility.redraw_speed = m.flag("redraw_speed", s.mobility.redraw_speed);
    s.mobility.redraw_heading = m.flag("redraw_heading", s.mobility.redraw_heading);
  }
  if (top.has("channel")) s.channel = channel_from_json(top.child("channel"), "channel");
  if (top.has("blockage")) {
    JsonReader b(top.child("blockage"), "blockage");
    BlockageHint h;
    h.lambda_b = b.non_negative("lambda_b", 0.0);
    h.l_min = b.positive("l_min");
    h.l_max = b.positive("l_max");
    h.gamma = b.positive("gamma");
    if (h.l_max < h.l_min) throw ParseError("l_max below l_min", 0, "blockage.l_max");
    s.blockage = h;
  }

  const auto& bs = top.child("buildings");
  if (!bs.is_array()) throw ParseError("expected an array", 0, "buildings");
  for (std::size_t i = 0; i < bs.size(); ++i) {
    JsonReader b(bs[i], "buildings[" + std::to_string(i) + "]");
    Cuboid c;
    c.cx = b.num("cx");
    c.cy = b.num("cy");
    c.len = b.positive("len");
    c.wid = b.positive("wid");
    c.height = b.positive("height");
    c.yaw = b.num("yaw", 0.0);
    s.buildings.push_back({c});
  }

  const auto& us = top.child("uavs");
  if (!us.is_array()) throw ParseError("expected an array", 0, "uavs");
  for (std::size_t i = 0; i < us.size(); ++i) {
    const std::string path = "uavs[" + std::to_string(i) + "]";
    JsonReader r(us[i], path);
    Uav u;
    u.id = static_cast<EntityId>(r.u64("id", i));
    u.pos = {r.num("x"), r.num("y"), r.positive("h")};
    u.range = r.positive("range");
    u.tx_power_dbm = r.num("tx_power_dbm", u.tx_power_dbm);
    u.gain_dbi = r.num("gain_dbi", u.gain_dbi);
    if (!s.region.contains(u.pos.ground())) throw ParseError("uav outside region", 0, path);
    s.uavs.push_back(u);
  }

  const auto& gs = top.child("users");
  if (!gs.is_array()) throw ParseError("expected an array", 0, "users");
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const std::string path = "users[" + std::to_string(i) + "]";
    JsonReader r(gs[i], path);
    User u;
    u.id = static_cast<EntityId>(r.u64("id", i));
    u.pos = {r.num("x"), r.num("y")};
    u.speed = r.non_negative("speed", 0.0);
    u.heading = r.num("heading", 0.0);
    const std::string t = r.has("traffic") ? r.child("traffic").get<std::string>() : "embb";
    if (t == "embb" || t == "eMBB")
      u.traffic = Traffic::embb;
    else if (t == "urllc" || t == "URLLC")
      u.traffic = Traffic::urllc;
    else
      throw ParseError("traffic must be embb or urllc", 0, r.at("traffic"));
    if (!s.region.contains(u.pos)) throw ParseError("user outside region", 0, path);
    s.users.push_back(u);
  }

  try {
    validate(s);
  } catch (const InvalidParams& e) {
    throw ParseError(e.what());
  }
  return s;
}

inline nlohmann::json params_to_json(const SceneParams& p) {
  return {{"region", {{"x_min", p.region.x_min}, {"x_max", p.region.x_max}, {"y_min", p.region.y_min},
                      {"y_max", p.region.y_max}}},
          {"lambda_b", p.lambda_b},
          {"lambda_u", p.lambda_u},
          {"uav_count", p.uav_count},
          {"l_min", p.l_min},
          {"l_max", p.l_max},
          {"gamma", p.gamma},
          {"random_yaw", p.random_yaw},
          {"uav_h_min", p.uav_h_min},
          {"uav_h_max", p.uav_h_max},
          {"uav_range", p.uav_range},
          {"tx_power_dbm", p.tx_power_dbm},
          {"uav_gain_dbi", p.uav_gain_dbi},
          {"user_count", p.user_count},
          {"urllc_fraction", p.urllc_fraction},
          {"dt", p.dt},
          {"mobility", {{"v_min", p.mobility.v_min},
                        {"v_max", p.mobility.v_max},
                        {"redraw_speed", p.mobility.redraw_speed},
                        {"redraw_heading", p.mobility.redraw_heading}}},
          {"channel", channel_to_json(p.channel)}};
}

// Every key is optional; missing keys keep the SceneParams defaults.
inline SceneParams params_from_json(const nlohmann::json& j, const std::string& path = "") {
  using detail::JsonReader;
  if (!j.is_object()) throw ParseError("scene parameters must be a JSON object", 0, path);
  JsonReader r(j, path);
  SceneParams p;
  if (r.has("region")) {
    JsonReader g(r.child("region"), r.at("region"));
    p.region = {g.num("x_min"), g.num("x_max"), g.num("y_min"), g.num("y_max")};
  }
  p.lambda_b = r.num("lambda_b", p.lambda_b);
  p.lambda_u = r.num("lambda_u", p.lambda_u);
  p.uav_count = static_cast<int>(r.u64("uav_count", static_cast<std::uint64_t>(p.uav_count)));
  p.l_min = r.num("l_min", p.l_min);
  p.l_max = r.num("l_max", p.l_max);
  p.gamma = r.num("gamma", p.gamma);
  p.random_yaw = r.flag("random_yaw", p.random_yaw);
  p.uav_h_min = r.num("uav_h_min", p.uav_h_min);
  p.uav_h_max = r.num("uav_h_max", p.uav_h_max);
  p.uav_range = r.num("uav_range", p.uav_range);
  p.tx_power_dbm = r.num("tx_power_dbm", p.tx_power_dbm);
  p.uav_gain_dbi = r.num("uav_gain_dbi", p.uav_gain_dbi);
  p.user_count = static_cast<int>(r.u64("user_count", static_cast<std::uint64_t>(p.user_count)));
  p.urllc_fraction = r.num("urllc_fraction", p.urllc_fraction);
  p.dt = r.num("dt", p.dt);
  if (r.has("mobility")) {
    JsonReader m(r.child("mobility"), r.at("mobility"));
    p.mobility.v_min = m.num("v_min", p.mobility.v_min);
    p.mobility.v_max = m.num("v_max", p.mobility.v_max);
    p.mobility.redraw_speed = m.flag("redraw_speed", p.mobility.redraw_speed);
    p.mobility.redraw_heading = m.flag("redraw_heading", p.mobility.redraw_heading);
  }
  if (r.has("channel")) p.channel = channel_from_json(r.child("channel"), r.at("channel"));
  try {
    validate(p);
  } catch (const InvalidParams& e) {
    throw ParseError(e.what(), 0, path);
  }
  return p;
}

inline nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), detail::line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

inline Scene parse_scene(const std::string& text) {
  const nlohmann::json j = parse_json_text(text);
  try {
    return scene_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

inline Scene load_scene(const std::filesystem::path& path) { return parse_scene(read_text_file(path)); }

inline void save_scene(const Scene& s, const std::filesystem::path& path) {
  write_text_file(path, scene_to_json(s).dump(2) + "\n");
}

}  // namespace uavlos
