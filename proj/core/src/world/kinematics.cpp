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

#include "fieldrover/world/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fieldrover::world {

RoverState step_kinematics(const RoverState& state, double throttle, double steer, double dt,
                           const RoverParams& params) {
  RoverState next = state;
  if (!(dt > 0.0)) return next;
  const double t = std::isfinite(throttle) ? std::clamp(throttle, 0.0, 1.0) : 0.0;
  const double d = std::isfinite(steer) ? std::clamp(steer, -params.max_steer, params.max_steer) : 0.0;

  next.speed = t * params.max_speed;
  next.steer_angle = d;
  next.x = state.x + next.speed * std::cos(state.heading) * dt;
  next.y = state.y + next.speed * std::sin(state.heading) * dt;
  next.heading = wrap_angle(state.heading + next.speed / params.wheelbase_m * std::tan(d) * dt);
  return next;
}

bool collision_check(const RoverState& state, const FieldMap& map, double rover_radius_m) {
  const Vec2 p = state.position();
  if (p.x - rover_radius_m < 0.0 || p.y - rover_radius_m < 0.0 ||
      p.x + rover_radius_m > map.width_m || p.y + rover_radius_m > map.height_m) {
    return true;
  }
  return std::any_of(map.obstacles.begin(), map.obstacles.end(),
                     [&](const Obstacle& o) { return distance_to(o, p) < rover_radius_m; });
}

double clearance(Vec2 position, double rover_radius_m, const std::vector<Obstacle>& obstacles) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& o : obstacles) {
    double d = distance_to(o, position);
    if (d == 0.0) {
      // Inside: report penetration depth for circles, zero-depth for rects.
      if (const auto* c = std::get_if<CircleObstacle>(&o)) {
        d = std::hypot(position.x - c->cx, position.y - c->cy) - c->radius;
      }
    }
    best = std::min(best, d - rover_radius_m);
  }
  return best;
}

}  // namespace fieldrover::world
