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

#include "fieldrover/nav/bendy_ruler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fieldrover/errors.hpp"

namespace fieldrover::nav {

void BendyRulerConfig::validate() const {
  if (!(lookahead_m > 0.0) || !(margin_m > 0.0) || !(step_deg > 0.0) || !(max_deviation_deg > 0.0)) {
    throw InvalidParameter("bendy ruler parameters must be positive");
  }
}

std::vector<double> candidate_deviations(const BendyRulerConfig& cfg) {
  std::vector<double> out{0.0};
  const int k_max = static_cast<int>(std::floor(cfg.max_deviation_deg / cfg.step_deg + 1e-9));
  for (int k = 1; k <= k_max; ++k) {
    const double dev = deg_to_rad(k * cfg.step_deg);
    out.push_back(-dev);
    out.push_back(dev);
  }
  return out;
}

double probe_clearance(Vec2 origin, double bearing, double length_m, std::span<const Vec2> points) {
  const Vec2 u = unit_from_angle(bearing);
  double best = std::numeric_limits<double>::infinity();
  for (const Vec2& p : points) {
    const Vec2 d = p - origin;
    const double along = dot(d, u);
    if (along < 0.0 || along > length_m) continue;
    best = std::min(best, std::abs(u.x * d.y - u.y * d.x));
  }
  return best;
}

AvoidanceDecision bendyruler_step(const world::RoverState& state, Vec2 target,
                                  const sensors::LidarScan& scan, const BendyRulerConfig& cfg) {
  cfg.validate();
  const Vec2 here = state.position();
  const double direct = std::atan2(target.y - here.y, target.x - here.x);
  const std::vector<Vec2> points = sensors::scan_points(state, scan);

  for (double dev : candidate_deviations(cfg)) {
    const double bearing = wrap_angle(direct + dev);
    if (probe_clearance(here, bearing, cfg.lookahead_m, points) > cfg.margin_m) {
      return {bearing, true, dev};
    }
  }
  return {direct, false, 0.0};
}

}  // namespace fieldrover::nav
