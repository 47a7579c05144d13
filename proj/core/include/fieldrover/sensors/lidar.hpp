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
#include <optional>
#include <span>
#include <vector>

#include "fieldrover/geometry.hpp"
#include "fieldrover/world/field_map.hpp"
#include "fieldrover/world/kinematics.hpp"

namespace fieldrover::sensors {

struct LidarBeam {
  double bearing = 0.0;          // rad, relative to rover heading
  std::optional<double> range;   // nullopt = NO_RETURN

  friend bool operator==(const LidarBeam&, const LidarBeam&) = default;
};

struct LidarScan {
  double timestamp = 0.0;
  std::vector<LidarBeam> beams;

  friend bool operator==(const LidarScan&, const LidarScan&) = default;
};

/// Scanning rangefinder model; defaults follow a 350-degree sweeping unit.
struct LidarConfig {
  double fov = deg_to_rad(350.0);
  int n_beams = 64;
  double max_range = 50.0;
  double noise_sigma = 0.03;
};

/// Ray-casts every beam against the obstacles. Field edges are not walls.
/// Bearings are evenly spaced over [-fov/2, +fov/2]; noise is N(0, sigma)
/// seeded by `seed`, and noisy ranges are kept within (0, max_range].
/// Throws InvalidParameter for fov outside (0, 350 deg], n_beams < 2, or
/// non-positive max_range.
LidarScan scan(const world::RoverState& state, std::span<const world::Obstacle> obstacles,
               const LidarConfig& cfg, std::uint64_t seed, double timestamp = 0.0);

inline LidarScan scan(const world::RoverState& state, const world::FieldMap& map,
                      const LidarConfig& cfg, std::uint64_t seed, double timestamp = 0.0) {
  return scan(state, std::span<const world::Obstacle>(map.obstacles), cfg, seed, timestamp);
}

/// Exact distance along the ray to the first obstacle surface, if any.
std::optional<double> cast_ray(Vec2 origin, double world_bearing,
                               std::span<const world::Obstacle> obstacles);

/// World-frame points of every beam that returned.
std::vector<Vec2> scan_points(const world::RoverState& state, const LidarScan& scan);

}  // namespace fieldrover::sensors
