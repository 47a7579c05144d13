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

#include "fieldrover/nav/path_tracker.hpp"

#include <algorithm>
#include <limits>

namespace fieldrover::nav {

PathTracker::PathTracker(std::vector<Vec2> points, double advance_radius_m)
    : points_(std::move(points)), advance_radius_m_(advance_radius_m) {}

PathTracker PathTracker::from_grid_path(const GridPath& path, const world::OccupancyGrid& grid,
                                        Vec2 start, Vec2 goal, double advance_radius_m) {
  std::vector<Vec2> pts{start};
  // Interior cells only: the first cell holds the rover, the last the goal.
  for (std::size_t i = 1; i + 1 < path.cells.size(); ++i) pts.push_back(grid.center_of(path.cells[i]));
  pts.push_back(goal);
  PathTracker t(std::move(pts), advance_radius_m);
  t.index_ = 1;
  return t;
}

Vec2 PathTracker::target(Vec2 position) {
  if (points_.empty()) return position;
  while (index_ + 1 < points_.size() && distance(position, points_[index_]) < advance_radius_m_) {
    ++index_;
  }
  return points_[index_];
}

double PathTracker::off_path_distance(Vec2 position) const {
  if (points_.empty()) return 0.0;
  if (points_.size() == 1) return distance(position, points_.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    best = std::min(best, point_segment_distance(position, points_[i], points_[i + 1]));
  }
  return best;
}

}  // namespace fieldrover::nav
