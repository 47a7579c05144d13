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

#include <compare>
#include <cstdint>
#include <vector>

#include "fieldrover/world/occupancy_grid.hpp"

namespace fieldrover::nav {

/// Path length in units of one cell, kept exact as straight + diagonal*sqrt(2)
/// so that equal-cost paths compare equal regardless of summation order.
struct StepCount {
  std::int64_t straight = 0;
  std::int64_t diagonal = 0;

  double cells() const;
  double meters(double cell_size_m) const { return cells() * cell_size_m; }

  friend StepCount operator+(StepCount a, StepCount b) {
    return {a.straight + b.straight, a.diagonal + b.diagonal};
  }
  friend bool operator==(const StepCount&, const StepCount&) = default;
  friend std::strong_ordering operator<=>(const StepCount& a, const StepCount& b);
};

struct GridPath {
  std::vector<world::Cell> cells;
  StepCount steps;
  double cost = 0.0;  // meters
};

/// Dijkstra over the 8-connected grid. Straight steps cost one cell size,
/// diagonal steps sqrt(2) cell sizes; a diagonal step may not cut the corner
/// of an OCCUPIED orthogonal neighbour. Frontier ties pop the lower row, then
/// the lower column. Throws InvalidEndpoint when start or goal is outside the
/// grid or OCCUPIED, NoPath when the goal is unreachable.
GridPath dijkstra_plan(const world::OccupancyGrid& grid, world::Cell start, world::Cell goal);

/// True iff the move from a to b is a legal single step on `grid`.
bool is_legal_step(const world::OccupancyGrid& grid, world::Cell a, world::Cell b);

}  // namespace fieldrover::nav
