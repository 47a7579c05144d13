// Copyright 2026 The fieldrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fieldrover/app/config.hpp"

#include <fstream>

#include "fieldrover/errors.hpp"
#include "json_util.hpp"

namespace fieldrover::app {

using nlohmann::json;

void apply_config_json(RunSettings& s, const json& doc) {
  constexpr std::string_view what = "config";
  detail::require_object(doc, what);
  detail::reject_unknown_keys(doc, what,
                              {"seed", "rtk", "gps_sigma_m", "battery_v", "max_time_s", "telemetry_rate_hz", "dt",
                               "lidar_noise_sigma_m", "bendy_lookahead_m", "bendy_margin_m", "max_speed", "conf_thr",
                               "iou_thr", "dynamic_obstacles"});
  auto& mc = s.mission_config;
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) throw ParseError("config: seed must be a non-negative integer");
    s.seed = doc.at("seed").get<std::uint64_t>();
  }
  s.rtk = detail::get_bool_or(doc, "rtk", s.rtk, what);
  if (doc.contains("gps_sigma_m")) s.gps_sigma_m = detail::get_number(doc, "gps_sigma_m", what);
  if (doc.contains("battery_v")) s.battery_v = detail::get_number(doc, "battery_v", what);
  s.max_time_s = detail::get_number_or(doc, "max_time_s", s.max_time_s, what);
  s.telemetry_rate_hz = detail::get_number_or(doc, "telemetry_rate_hz", s.telemetry_rate_hz, what);
  mc.dt = detail::get_number_or(doc, "dt", mc.dt, what);
  mc.lidar.noise_sigma = detail::get_number_or(doc, "lidar_noise_sigma_m", mc.lidar.noise_sigma, what);
  mc.bendy.lookahead_m = detail::get_number_or(doc, "bendy_lookahead_m", mc.bendy.lookahead_m, what);
  mc.bendy.margin_m = detail::get_number_or(doc, "bendy_margin_m", mc.bendy.margin_m, what);
  mc.rover.max_speed = detail::get_number_or(doc, "max_speed", mc.rover.max_speed, what);
  s.eval.confidence_threshold = detail::get_number_or(doc, "conf_thr", s.eval.confidence_threshold, what);
  s.eval.iou_threshold = detail::get_number_or(doc, "iou_thr", s.eval.iou_threshold, what);

  if (auto it = doc.find("dynamic_obstacles"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("config: dynamic_obstacles must be an array");
    s.dynamic_obstacles.clear();
    for (const auto& o : *it) {
      constexpr std::string_view w = "dynamic obstacle";
      detail::require_object(o, w);
      detail::reject_unknown_keys(o, w, {"cx", "cy", "radius", "appear_t", "vx", "vy"});
      mission::DynamicObstacle d;
      d.shape = {detail::get_number(o, "cx", w), detail::get_number(o, "cy", w), detail::get_number(o, "radius", w)};
      if (!(d.shape.radius > 0.0)) throw ParseError("config: dynamic obstacle radius must be positive");
      d.appear_t = detail::get_number_or(o, "appear_t", 0.0, w);
      d.velocity = {detail::get_number_or(o, "vx", 0.0, w), detail::get_number_or(o, "vy", 0.0, w)};
      s.dynamic_obstacles.push_back(d);
    }
  }
}

void apply_config_file(RunSettings& settings, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError("config file " + path.string() + ": " + e.what());
  }
  apply_config_json(settings, doc);
}

mission::MissionConfig effective_mission_config(const RunSettings& s) {
  mission::MissionConfig mc = s.mission_config;
  mc.seed = s.seed;
  mc.rtk_enabled = s.rtk;
  if (s.gps_sigma_m) {
    if (!(*s.gps_sigma_m > 0.0)) throw InvalidParameter("gps sigma must be positive");
    mc.gps.sigma_gps3d_m = *s.gps_sigma_m;
  }
  if (s.battery_v) mc.health.battery_v = *s.battery_v;
  return mc;
}

}  // namespace fieldrover::app
