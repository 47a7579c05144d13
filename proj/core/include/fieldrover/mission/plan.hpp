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

#include <filesystem>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "fieldrover/geometry.hpp"
#include "fieldrover/world/field_map.hpp"
#include "fieldrover/world/kinematics.hpp"

namespace fieldrover::mission {

struct Waypoint {
  Vec2 position;  // local meters
  double speed = 1.5;
  double acceptance_radius = 2.0;
  bool trigger_camera = false;

  friend bool operator==(const Waypoint&, const Waypoint&) = default;
};

/// Where the rover sits when the run starts.
struct HomePose {
  Vec2 position;
  double heading_deg = 0.0;  // counter-clockwise from +x

  friend bool operator==(const HomePose&, const HomePose&) = default;
};

struct MissionPlan {
  std::vector<Waypoint> waypoints;
  std::optional<HomePose> home;

  /// Throws InvalidParameter: empty plan, non-positive radius, or a speed
  /// outside (0, max_speed].
  void validate(const world::RoverParams& rover = {}) const;

  friend bool operator==(const MissionPlan&, const MissionPlan&) = default;
};

// Mission file:
//   {"frame": "local"|"geo",
//    "waypoints": [{"x": .., "y": .., "speed": .., "acceptance_radius": ..,
//                   "trigger_camera": true}],
//    "home": {"x": .., "y": .., "heading_deg": ..}}
// In the geo frame each waypoint carries "lat"/"lon" instead of "x"/"y" and is
// projected through the world's origin_geo. speed defaults to 1.5 m/s and
// acceptance_radius to 2 m. "home" is optional; in the geo frame it also
// takes lat/lon.

MissionPlan mission_from_json(const nlohmann::json& doc,
                              const std::optional<world::GeoPoint>& anchor = std::nullopt);
nlohmann::json mission_to_json(const MissionPlan& plan);
MissionPlan load_mission(const std::filesystem::path& path,
                         const std::optional<world::GeoPoint>& anchor = std::nullopt);

}  // namespace fieldrover::mission
