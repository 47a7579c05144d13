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

#include "fieldrover/world/field_map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fieldrover/errors.hpp"

namespace fieldrover::world {

namespace {

constexpr double kEarthRadiusM = 6378137.0;

bool finite(double v) { return std::isfinite(v); }

}  // namespace

double distance_to(const Obstacle& obstacle, Vec2 p) {
  return std::visit(
      [p](const auto& o) -> double {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, RectObstacle>) {
          const double dx = std::max({o.x_min - p.x, 0.0, p.x - o.x_max});
          const double dy = std::max({o.y_min - p.y, 0.0, p.y - o.y_max});
          return std::hypot(dx, dy);
        } else {
          return std::max(0.0, std::hypot(p.x - o.cx, p.y - o.cy) - o.radius);
        }
      },
      obstacle);
}

GeoPoint local_to_geo(const GeoPoint& anchor, Vec2 local) {
  const double lat0 = deg_to_rad(anchor.lat_deg);
  return {anchor.lat_deg + rad_to_deg(local.y / kEarthRadiusM),
          anchor.lon_deg + rad_to_deg(local.x / (kEarthRadiusM * std::cos(lat0)))};
}

Vec2 geo_to_local(const GeoPoint& anchor, const GeoPoint& geo) {
  const double lat0 = deg_to_rad(anchor.lat_deg);
  return {deg_to_rad(geo.lon_deg - anchor.lon_deg) * kEarthRadiusM * std::cos(lat0),
          deg_to_rad(geo.lat_deg - anchor.lat_deg) * kEarthRadiusM};
}

void FieldMap::validate() const {
  if (!(finite(width_m) && width_m > 0.0) || !(finite(height_m) && height_m > 0.0)) {
    throw InvalidParameter("field dimensions must be positive");
  }
  if (origin_geo) {
    if (!finite(origin_geo->lat_deg) || std::abs(origin_geo->lat_deg) >= 90.0 ||
        !finite(origin_geo->lon_deg) || std::abs(origin_geo->lon_deg) > 180.0) {
      throw InvalidParameter("origin_geo out of range");
    }
  }
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    const std::string tag = "obstacle " + std::to_string(i);
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, RectObstacle>) {
            if (!(finite(o.x_min) && finite(o.x_max) && finite(o.y_min) && finite(o.y_max)) ||
                !(o.x_min < o.x_max && o.y_min < o.y_max)) {
              throw InvalidParameter(tag + ": degenerate rectangle");
            }
            if (o.x_min < 0.0 || o.y_min < 0.0 || o.x_max > width_m || o.y_max > height_m) {
              throw InvalidParameter(tag + ": outside field bounds");
            }
          } else {
            if (!(finite(o.cx) && finite(o.cy) && finite(o.radius)) || !(o.radius > 0.0)) {
              throw InvalidParameter(tag + ": degenerate circle");
            }
            if (o.cx - o.radius < 0.0 || o.cy - o.radius < 0.0 || o.cx + o.radius > width_m ||
                o.cy + o.radius > height_m) {
              throw InvalidParameter(tag + ": outside field bounds");
            }
          }
        },
        obstacles[i]);
  }
}

}  // namespace fieldrover::world
