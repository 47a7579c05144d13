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
#include <variant>
#include <vector>

#include "fieldrover/geometry.hpp"

namespace fieldrover::world {

/// Axis-aligned rectangle obstacle, meters in the local field frame.
struct RectObstacle {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  friend bool operator==(const RectObstacle&, const RectObstacle&) = default;
};

struct CircleObstacle {
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;

  friend bool operator==(const CircleObstacle&, const CircleObstacle&) = default;
};

using Obstacle = std::variant<RectObstacle, CircleObstacle>;

/// Distance from p to the obstacle's closed region (0 inside).
double distance_to(const Obstacle& obstacle, Vec2 p);

/// Geographic anchor of the local frame origin.
struct GeoPoint {
  double lat_deg = 0.0;
  double lon_deg = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

/// Local ENU meters <-> geographic degrees via an equirectangular projection
/// about the anchor. Accurate to well under a centimeter over a farm field.
GeoPoint local_to_geo(const GeoPoint& anchor, Vec2 local);
Vec2 geo_to_local(const GeoPoint& anchor, const GeoPoint& geo);

/// Rectangular field [0, width_m] x [0, height_m] with static obstacles.
struct FieldMap {
  double width_m = 0.0;
  double height_m = 0.0;
  std::vector<Obstacle> obstacles;
  std::optional<GeoPoint> origin_geo;

  /// Throws InvalidParameter when dimensions are not positive or an obstacle
  /// is degenerate or not fully inside the field.
  void validate() const;

  bool contains(Vec2 p) const {
    return p.x >= 0.0 && p.y >= 0.0 && p.x <= width_m && p.y <= height_m;
  }
};

}  // namespace fieldrover::world
