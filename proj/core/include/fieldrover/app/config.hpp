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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "fieldrover/mission/executive.hpp"
#include "fieldrover/yieldkit/metrics.hpp"

namespace fieldrover::app {

/// Everything a simulated run needs. Precedence is applied by the caller:
/// defaults, then a config file through apply_config_json, then flags.
struct RunSettings {
  std::filesystem::path world;
  std::filesystem::path mission;
  std::filesystem::path out = "out";
  std::uint64_t seed = 0;
  bool rtk = true;
  std::optional<double> gps_sigma_m;  // overrides the GPS_3D sigma
  std::optional<double> battery_v;
  double max_time_s = 900.0;
  double telemetry_rate_hz = 10.0;
  std::optional<std::uint16_t> telemetry_port;
  std::optional<std::uint16_t> rtk_port;
  bool realtime = false;
  std::vector<mission::DynamicObstacle> dynamic_obstacles;
  mission::MissionConfig mission_config;
  yieldkit::EvalConfig eval;
};

// Config file keys (all optional, unknown keys rejected):
//   seed, rtk, gps_sigma_m, battery_v, max_time_s, telemetry_rate_hz, dt,
//   lidar_noise_sigma_m, bendy_lookahead_m, bendy_margin_m, max_speed,
//   conf_thr, iou_thr,
//   dynamic_obstacles: [{cx, cy, radius, appear_t, vx, vy}]
void apply_config_json(RunSettings& settings, const nlohmann::json& doc);
void apply_config_file(RunSettings& settings, const std::filesystem::path& path);

/// Mission configuration with the run-level switches folded in.
mission::MissionConfig effective_mission_config(const RunSettings& settings);

}  // namespace fieldrover::app
