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

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fieldrover/mission/executive.hpp"

namespace fieldrover::telemetry {

/// One telemetry sample as broadcast to ground control and written to the log.
struct TelemetryFrame {
  double t = 0.0;
  mission::MissionState mode = mission::MissionState::Disarmed;
  bool armed = false;
  std::optional<Vec2> position;          // GPS estimate; empty without a fix
  std::optional<world::GeoPoint> geo;    // when the world is geo-anchored
  Vec2 true_position;
  double heading_deg = 0.0;
  double ground_speed = 0.0;
  double altitude_m = 0.0;               // planar simulation
  double distance_to_waypoint = 0.0;
  int next_waypoint = 0;
  double battery_v = 0.0;
  sensors::FixType fix_type = sensors::FixType::None;
  mission::LedState led_state = mission::LedState::RedBooting;
  double odometer_m = 0.0;
  std::optional<double> min_clearance_m;  // empty until an obstacle exists
  int collisions = 0;
  int captures = 0;
  std::vector<mission::MissionEvent> events;  // raised since the previous frame
  std::optional<mission::MissionEvent> last_event;

  friend bool operator==(const TelemetryFrame&, const TelemetryFrame&) = default;
};

TelemetryFrame make_frame(const mission::Snapshot& snap, std::vector<mission::MissionEvent> events,
                          const std::optional<world::GeoPoint>& anchor);

/// {"type":"frame", ...}; heading in degrees.
nlohmann::json frame_to_json(const TelemetryFrame& f);
TelemetryFrame frame_from_json(const nlohmann::json& doc);

}  // namespace fieldrover::telemetry
