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

#include <span>
#include <vector>

#include "fieldrover/geometry.hpp"
#include "fieldrover/sensors/lidar.hpp"
#include "fieldrover/world/kinematics.hpp"

namespace fieldrover::nav {

struct BendyRulerConfig {
  double lookahead_m = 5.0;
  double margin_m = 0.8;
  double step_deg = 5.0;
  double max_deviation_deg = 80.0;

  /// Throws InvalidParameter unless every value is positive.
  void validate() const;
};

struct AvoidanceDecision {
  double chosen_bearing = 0.0;  // rad, world frame
  bool clear = false;
  double deviation = 0.0;       // rad, chosen - direct

  friend bool operator==(const AvoidanceDecision&, const AvoidanceDecision&) = default;
};

/// Deviations in the order they are tried: 0, -step, +step, -2*step, ...
/// (right before left) up to max_deviation_deg, in radians.
std::vector<double> candidate_deviations(const BendyRulerConfig& cfg);

/// Smallest lateral offset of any obstacle point inside the probe corridor,
/// the band that starts at `origin` and runs `length_m` along `bearing`.
/// Points behind the origin or past the far end are outside it. Infinite when
/// the corridor is empty.
double probe_clearance(Vec2 origin, double bearing, double length_m, std::span<const Vec2> points);

/// Picks the least-deviating bearing whose probe corridor is clear of every
/// LiDAR return by more than margin_m. An empty scan leaves every candidate
/// admissible. When nothing is admissible the decision is not clear and the
/// caller must command zero speed.
AvoidanceDecision bendyruler_step(const world::RoverState& state, Vec2 target,
                                  const sensors::LidarScan& scan, const BendyRulerConfig& cfg);

}  // namespace fieldrover::nav
