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

#include "fieldrover/geometry.hpp"
#include "fieldrover/world/field_map.hpp"

namespace fieldrover::world {

/// Ground-truth rover state in the local field frame.
struct RoverState {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // rad, [-pi, pi), 0 = +x, counter-clockwise positive
  double speed = 0.0;    // m/s, [0, max_speed]
  double steer_angle = 0.0;  // rad, positive steers left
  double battery_v = 30.8;
  double vibration = 0.0;

  Vec2 position() const { return {x, y}; }
  friend bool operator==(const RoverState&, const RoverState&) = default;
};

struct RoverParams {
  double wheelbase_m = 0.5;
  double max_speed = 5.0;
  double max_steer = deg_to_rad(30.0);
  double radius_m = 0.3;
};

/// One explicit-Euler step of the kinematic bicycle model. Throttle in [0,1]
/// sets speed = throttle * max_speed (negative throttle means stop); steer is
/// clamped to +-max_steer. Position advances along the pre-step heading.
RoverState step_kinematics(const RoverState& state, double throttle, double steer, double dt,
                           const RoverParams& params = {});

/// True iff the rover disc strictly overlaps an obstacle or leaves the field.
/// Touching at exactly `rover_radius_m` is not a collision.
bool collision_check(const RoverState& state, const FieldMap& map, double rover_radius_m);

/// Signed gap between the rover disc and the nearest obstacle in `obstacles`
/// (negative when overlapping). +inf when there are none.
double clearance(Vec2 position, double rover_radius_m, const std::vector<Obstacle>& obstacles);

}  // namespace fieldrover::world
