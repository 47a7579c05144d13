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

#include <cstddef>
#include <vector>

#include "fieldrover/geometry.hpp"
#include "fieldrover/nav/dijkstra.hpp"

namespace fieldrover::nav {

/// Carrot-style follower over a planned polyline. The current target is the
/// first remaining vertex farther than `advance_radius_m` from the rover;
/// the final vertex is always kept as the last target.
class PathTracker {
 public:
  PathTracker() = default;
  PathTracker(std::vector<Vec2> points, double advance_radius_m);

  /// Cell-center polyline from `start` along `path`, ending exactly at `goal`.
  static PathTracker from_grid_path(const GridPath& path, const world::OccupancyGrid& grid,
                                    Vec2 start, Vec2 goal, double advance_radius_m);

  bool empty() const { return points_.empty(); }
  std::size_t index() const { return index_; }
  const std::vector<Vec2>& points() const { return points_; }

  Vec2 target(Vec2 position);

  /// Distance from `position` to the planned polyline.
  double off_path_distance(Vec2 position) const;

 private:
  std::vector<Vec2> points_;
  double advance_radius_m_ = 1.0;
  std::size_t index_ = 0;
};

}  // namespace fieldrover::nav
