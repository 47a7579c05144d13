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

#include <cstdint>
#include <vector>

#include "fieldrover/geometry.hpp"
#include "fieldrover/world/field_map.hpp"

namespace fieldrover::world {

struct Cell {
  int col = 0;
  int row = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Row-major FREE/OCCUPIED grid. Cell (col,row) covers
/// [col*cell, (col+1)*cell] x [row*cell, (row+1)*cell] in field meters.
class OccupancyGrid {
 public:
  OccupancyGrid() = default;
  OccupancyGrid(int cols, int rows, double cell_size_m);

  int cols() const noexcept { return cols_; }
  int rows() const noexcept { return rows_; }
  double cell_size() const noexcept { return cell_size_m_; }

  bool in_bounds(Cell c) const noexcept {
    return c.col >= 0 && c.row >= 0 && c.col < cols_ && c.row < rows_;
  }
  bool occupied(Cell c) const { return cells_.at(index(c)) != 0; }
  bool free(Cell c) const { return in_bounds(c) && cells_[index(c)] == 0; }
  void set_occupied(Cell c, bool value = true) { cells_.at(index(c)) = value ? 1 : 0; }

  std::size_t index(Cell c) const noexcept {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c.col);
  }
  std::size_t occupied_count() const;

  Vec2 center_of(Cell c) const {
    return {(c.col + 0.5) * cell_size_m_, (c.row + 0.5) * cell_size_m_};
  }
  /// Cell containing p; points on a shared edge go to the higher index.
  Cell cell_at(Vec2 p) const;

  friend bool operator==(const OccupancyGrid&, const OccupancyGrid&) = default;

 private:
  int cols_ = 0;
  int rows_ = 0;
  double cell_size_m_ = 1.0;
  std::vector<std::uint8_t> cells_;
};

/// Rasterizes the map. A cell is OCCUPIED iff its open interior intersects an
/// obstacle grown by `inflation_m`; cols = ceil(width/cell), rows likewise.
OccupancyGrid rasterize(const FieldMap& map, double cell_size_m, double inflation_m);

/// Additionally marks every cell whose interior reaches within `margin_m` of
/// the field edge (or lies outside it). Keeps planned paths off the boundary.
void mark_boundary(OccupancyGrid& grid, const FieldMap& map, double margin_m);

}  // namespace fieldrover::world
