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

#include "fieldrover/world/occupancy_grid.hpp"

#include <algorithm>
#include <cmath>

#include "fieldrover/errors.hpp"

namespace fieldrover::world {

namespace {

struct Box {
  double x0, y0, x1, y1;
};

Box cell_box(const OccupancyGrid& g, int col, int row) {
  const double s = g.cell_size();
  return {col * s, row * s, (col + 1) * s, (row + 1) * s};
}

// Open cell interior vs closed obstacle grown by `inflation`.
bool cell_hits(const Box& c, const Obstacle& obstacle, double inflation) {
  return std::visit(
      [&](const auto& o) -> bool {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, RectObstacle>) {
          const bool overlap = o.x_min < c.x1 && o.x_max > c.x0 && o.y_min < c.y1 && o.y_max > c.y0;
          if (overlap) return true;
          const double dx = std::max({0.0, o.x_min - c.x1, c.x0 - o.x_max});
          const double dy = std::max({0.0, o.y_min - c.y1, c.y0 - o.y_max});
          return std::hypot(dx, dy) < inflation;
        } else {
          const double dx = std::max({0.0, c.x0 - o.cx, o.cx - c.x1});
          const double dy = std::max({0.0, c.y0 - o.cy, o.cy - c.y1});
          return std::hypot(dx, dy) < o.radius + inflation;
        }
      },
      obstacle);
}

}  // namespace

OccupancyGrid::OccupancyGrid(int cols, int rows, double cell_size_m)
    : cols_(cols), rows_(rows), cell_size_m_(cell_size_m) {
  if (cols <= 0 || rows <= 0 || !(cell_size_m > 0.0)) {
    throw InvalidParameter("occupancy grid needs positive dimensions");
  }
  cells_.assign(static_cast<std::size_t>(cols) * static_cast<std::size_t>(rows), 0);
}

std::size_t OccupancyGrid::occupied_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

Cell OccupancyGrid::cell_at(Vec2 p) const {
  const int col = static_cast<int>(std::floor(p.x / cell_size_m_));
  const int row = static_cast<int>(std::floor(p.y / cell_size_m_));
  return {std::clamp(col, 0, cols_ - 1), std::clamp(row, 0, rows_ - 1)};
}

OccupancyGrid rasterize(const FieldMap& map, double cell_size_m, double inflation_m) {
  if (!(cell_size_m > 0.0) || !std::isfinite(cell_size_m)) {
    throw InvalidParameter("cell_size_m must be positive");
  }
  if (!(inflation_m >= 0.0) || !std::isfinite(inflation_m)) {
    throw InvalidParameter("inflation_m must be non-negative");
  }
  const int cols = static_cast<int>(std::ceil(map.width_m / cell_size_m));
  const int rows = static_cast<int>(std::ceil(map.height_m / cell_size_m));
  OccupancyGrid grid(cols, rows, cell_size_m);

  for (const auto& obstacle : map.obstacles) {
    // Only cells within the obstacle's grown bounding box can be hit.
    double bx0, by0, bx1, by1;
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, RectObstacle>) {
            bx0 = o.x_min; by0 = o.y_min; bx1 = o.x_max; by1 = o.y_max;
          } else {
            bx0 = o.cx - o.radius; by0 = o.cy - o.radius;
            bx1 = o.cx + o.radius; by1 = o.cy + o.radius;
          }
        },
        obstacle);
    const int c0 = std::max(0, static_cast<int>(std::floor((bx0 - inflation_m) / cell_size_m)) - 1);
    const int r0 = std::max(0, static_cast<int>(std::floor((by0 - inflation_m) / cell_size_m)) - 1);
    const int c1 = std::min(cols - 1, static_cast<int>(std::floor((bx1 + inflation_m) / cell_size_m)) + 1);
    const int r1 = std::min(rows - 1, static_cast<int>(std::floor((by1 + inflation_m) / cell_size_m)) + 1);
    for (int r = r0; r <= r1; ++r) {
      for (int c = c0; c <= c1; ++c) {
        if (cell_hits(cell_box(grid, c, r), obstacle, inflation_m)) grid.set_occupied({c, r});
      }
    }
  }
  return grid;
}

void mark_boundary(OccupancyGrid& grid, const FieldMap& map, double margin_m) {
  for (int r = 0; r < grid.rows(); ++r) {
    for (int c = 0; c < grid.cols(); ++c) {
      const Box b = cell_box(grid, c, r);
      if (b.x0 < margin_m || b.y0 < margin_m || b.x1 > map.width_m - margin_m ||
          b.y1 > map.height_m - margin_m) {
        grid.set_occupied({c, r});
      }
    }
  }
}

}  // namespace fieldrover::world
