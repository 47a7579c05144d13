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

#include "fieldrover/nav/steering.hpp"

#include <algorithm>

namespace fieldrover::nav {

SteerCommand steer_to_bearing(const world::RoverState& state, double bearing, double speed_cmd,
                              const world::RoverParams& rover, const SteeringGains& gains) {
  const double err = angle_error(bearing, state.heading);
  SteerCommand cmd;
  cmd.steer = std::clamp(gains.heading_kp * err, -rover.max_steer, rover.max_steer);
  cmd.throttle = rover.max_speed > 0.0 ? std::clamp(speed_cmd / rover.max_speed, 0.0, 1.0) : 0.0;
  return cmd;
}

}  // namespace fieldrover::nav
