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

#include "fieldrover/world/kinematics.hpp"

namespace fieldrover::nav {

struct SteerCommand {
  double throttle = 0.0;  // [0, 1]
  double steer = 0.0;     // rad, positive = left

  friend bool operator==(const SteerCommand&, const SteerCommand&) = default;
};

struct SteeringGains {
  double heading_kp = 1.5;
};

/// P-controller on heading error; steer saturates at max_steer and a
/// half-turn error steers left. Throttle is speed_cmd / max_speed.
SteerCommand steer_to_bearing(const world::RoverState& state, double bearing, double speed_cmd,
                              const world::RoverParams& rover = {}, const SteeringGains& gains = {});

}  // namespace fieldrover::nav
