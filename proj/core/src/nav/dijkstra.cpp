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

#include "fieldrover/nav/dijkstra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

#include "fieldrover/errors.hpp"

namespace fieldrover::nav {

using world::Cell;
using world::OccupancyGrid;

double StepCount::cells() const {
  return static_cast<double>(straight) + static_cast<double>(diagonal) * std::sqrt(2.0);
}

std::strong_ordering operator<=>(const StepCount& a, const StepCount& b) {
  // sign of ds + dd*sqrt(2); exact because sqrt(2) is irrational.
  const std::int64_t ds = a.straight - b.straight;
  const std::int64_t dd = a.diagonal - b.diagonal;
  if (ds == 0 && dd == 0) return std::strong_ordering::equal;
  if (ds >= 0 && dd >= 0) return std::strong_ordering::greater;
  if (ds <= 0 && dd <= 0) return std::strong_ordering::less;
  const std::int64_t s2 = ds * ds;
  const std::int64_t d2 = 2 * dd * dd;
  if (ds > 0) return s2 > d2 ? std::strong_ordering::greater : std::strong_ordering::less;
  return d2 > s2 ? std::strong_ordering::greater : std::strong_ordering::less;
}

bool is_legal_step(const OccupancyGrid& grid, Cell a, Cell b) {
  const int dc = b.col - a.col;
  const int dr = b.row - a.row;
  if ((dc == 0 && dr == 0) || std::abs(dc) > 1 || std::abs(dr) > 1) return false;
  if (!grid.free(a) || !grid.free(b)) return false;
  if (dc != 0 && dr != 0) {
    return grid.free({a.col + dc, a.row}) && grid.free({a.col, a.row + dr});
  }
  return true;
}

GridPath dijkstra_plan(const OccupancyGrid& grid, Cell start, Cell goal) {
  if (!grid.in_bounds(start) || !grid.in_bounds(goal)) {
    throw InvalidEndpoint("start or goal outside the grid");
  }
  if (grid.occupied(start)) throw InvalidEndpoint("start cell is occupied");
  if (grid.occupied(goal)) throw InvalidEndpoint("goal cell is occupied");

  const std::size_t n = static_cast<std::size_t>(grid.cols()) * static_cast<std::size_t>(grid.rows());
  constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
  std::vector<StepCount> dist(n, StepCount{kUnreached, 0});
  std::vector<std::int64_t> parent(n, -1);
  std::vector<bool> done(n, false);

  using Entry = std::tuple<StepCount, int, int>;  // cost, row, col
  auto later = [](const Entry& a, const Entry& b) { return a > b; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> open(later);

  dist[grid.index(start)] = {};
  open.emplace(StepCount{}, start.row, start.col);

  static constexpr int kDc[8] = {1, -1, 0, 0, 1, 1, -1, -1};
  static constexpr int kDr[8] = {0, 0, 1, -1, 1, -1, 1, -1};

  while (!open.empty()) {
    auto [cost, row, col] = open.top();
    open.pop();
    const Cell cur{col, row};
    const std::size_t ci = grid.index(cur);
    if (done[ci]) continue;
    done[ci] = true;
    if (cur == goal) break;
    for (int k = 0; k < 8; ++k) {
      const Cell nb{col + kDc[k], row + kDr[k]};
      if (!grid.in_bounds(nb) || !is_legal_step(grid, cur, nb)) continue;
      const std::size_t ni = grid.index(nb);
      if (done[ni]) continue;
      const StepCount step = (kDc[k] != 0 && kDr[k] != 0) ? StepCount{0, 1} : StepCount{1, 0};
      const StepCount cand = cost + step;
      if (dist[ni].straight == kUnreached || cand < dist[ni]) {
        dist[ni] = cand;
        parent[ni] = static_cast<std::int64_t>(ci);
        open.emplace(cand, nb.row, nb.col);
      }
    }
  }

  const std::size_t gi = grid.index(goal);
  if (!done[gi]) throw NoPath("goal unreachable from start");

  GridPath path;
  for (std::int64_t i = static_cast<std::int64_t>(gi); i >= 0; i = parent[static_cast<std::size_t>(i)]) {
    path.cells.push_back({static_cast<int>(i % grid.cols()), static_cast<int>(i / grid.cols())});
  }
  std::reverse(path.cells.begin(), path.cells.end());
  path.steps = dist[gi];
  path.cost = path.steps.meters(grid.cell_size());
  return path;
}

}  // namespace fieldrover::nav
