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

#include "fieldrover/sensors/lidar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fieldrover/errors.hpp"
#include "fieldrover/random.hpp"

namespace fieldrover::sensors {

namespace {

constexpr double kMinRange = 1e-3;
constexpr double kInf = std::numeric_limits<double>::infinity();

double ray_rect(Vec2 o, Vec2 d, const world::RectObstacle& r) {
  double t0 = -kInf;
  double t1 = kInf;
  const double lo[2] = {r.x_min, r.y_min};
  const double hi[2] = {r.x_max, r.y_max};
  const double org[2] = {o.x, o.y};
  const double dir[2] = {d.x, d.y};
  for (int axis = 0; axis < 2; ++axis) {
    if (dir[axis] == 0.0) {
      if (org[axis] < lo[axis] || org[axis] > hi[axis]) return kInf;
      continue;
    }
    double a = (lo[axis] - org[axis]) / dir[axis];
    double b = (hi[axis] - org[axis]) / dir[axis];
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
  }
  if (t0 > t1 || t1 < 0.0) return kInf;
  return std::max(t0, 0.0);
}

double ray_circle(Vec2 o, Vec2 d, const world::CircleObstacle& c) {
  const Vec2 oc = o - Vec2{c.cx, c.cy};
  const double b = dot(oc, d);
  const double cc = dot(oc, oc) - c.radius * c.radius;
  if (cc <= 0.0) return 0.0;  // origin inside
  const double disc = b * b - cc;
  if (disc < 0.0) return kInf;
  const double t = -b - std::sqrt(disc);
  return t >= 0.0 ? t : kInf;
}

}  // namespace

std::optional<double> cast_ray(Vec2 origin, double world_bearing,
                               std::span<const world::Obstacle> obstacles) {
  const Vec2 d = unit_from_angle(world_bearing);
  double best = kInf;
  for (const auto& obstacle : obstacles) {
    const double t = std::visit(
        [&](const auto& o) -> double {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, world::RectObstacle>) {
            return ray_rect(origin, d, o);
          } else {
            return ray_circle(origin, d, o);
          }
        },
        obstacle);
    best = std::min(best, t);
  }
  if (best == kInf) return std::nullopt;
  return best;
}

LidarScan scan(const world::RoverState& state, std::span<const world::Obstacle> obstacles,
               const LidarConfig& cfg, std::uint64_t seed, double timestamp) {
  if (!(cfg.fov > 0.0) || cfg.fov > deg_to_rad(350.0) + 1e-12) {
    throw InvalidParameter("lidar fov must be in (0, 350] degrees");
  }
  if (cfg.n_beams < 2) throw InvalidParameter("lidar needs at least two beams");
  if (!(cfg.max_range > 0.0)) throw InvalidParameter("lidar max_range must be positive");
  if (!(cfg.noise_sigma >= 0.0)) throw InvalidParameter("lidar noise sigma must be >= 0");

  Rng rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);

  LidarScan out;
  out.timestamp = timestamp;
  out.beams.reserve(static_cast<std::size_t>(cfg.n_beams));
  const double half = cfg.fov / 2.0;
  const double step = cfg.fov / (cfg.n_beams - 1);
  const Vec2 origin = state.position();
  for (int i = 0; i < cfg.n_beams; ++i) {
    const double bearing = i == cfg.n_beams - 1 ? half : -half + i * step;
    LidarBeam beam{bearing, std::nullopt};
    // Draw unconditionally so beam i always consumes the same variate.
    const double n = noise(rng);
    if (auto hit = cast_ray(origin, state.heading + bearing, obstacles);
        hit && *hit <= cfg.max_range) {
      beam.range = std::clamp(*hit + cfg.noise_sigma * n, kMinRange, cfg.max_range);
    }
    out.beams.push_back(beam);
  }
  return out;
}

std::vector<Vec2> scan_points(const world::RoverState& state, const LidarScan& scan) {
  std::vector<Vec2> pts;
  pts.reserve(scan.beams.size());
  for (const auto& b : scan.beams) {
    if (b.range) pts.push_back(state.position() + unit_from_angle(state.heading + b.bearing) * *b.range);
  }
  return pts;
}

}  // namespace fieldrover::sensors
