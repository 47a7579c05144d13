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

#include <benchmark/benchmark.h>

#include <random>

#include "fieldrover/nav/bendy_ruler.hpp"
#include "fieldrover/nav/dijkstra.hpp"
#include "fieldrover/sensors/lidar.hpp"
#include "fieldrover/world/occupancy_grid.hpp"

namespace fn = fieldrover::nav;
namespace fs = fieldrover::sensors;
namespace fw = fieldrover::world;

namespace {

// Orchard-like field: rows of trunks with a headland at both ends.
fw::FieldMap orchard(double side_m) {
  fw::FieldMap map;
  map.width_m = side_m;
  map.height_m = side_m;
  for (double x = 4; x < side_m - 4; x += 4)
    for (double y = 6; y < side_m - 6; y += 2.5) map.obstacles.push_back(fw::CircleObstacle{x, y, 0.4});
  return map;
}

void BM_Dijkstra(benchmark::State& state) {
  const double side = static_cast<double>(state.range(0));
  const auto grid = fw::rasterize(orchard(side), 0.5, 0.5);
  const fw::Cell start{1, 1}, goal{grid.cols() - 2, grid.rows() - 2};
  for (auto _ : state) benchmark::DoNotOptimize(fn::dijkstra_plan(grid, start, goal));
  state.counters["cells"] = static_cast<double>(grid.cols()) * grid.rows();
}
BENCHMARK(BM_Dijkstra)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Rasterize(benchmark::State& state) {
  const auto map = orchard(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fw::rasterize(map, 0.5, 0.5));
}
BENCHMARK(BM_Rasterize)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_LidarScan(benchmark::State& state) {
  const auto map = orchard(60);
  fs::LidarConfig cfg;
  cfg.n_beams = static_cast<int>(state.range(0));
  fw::RoverState pose;
  pose.x = 6;
  pose.y = 10;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fs::scan(pose, map, cfg, ++seed));
}
BENCHMARK(BM_LidarScan)->Arg(64)->Arg(360);

void BM_BendyRuler(benchmark::State& state) {
  const auto map = orchard(60);
  fw::RoverState pose;
  pose.x = 6;
  pose.y = 10.5;
  fs::LidarConfig lidar;
  lidar.n_beams = static_cast<int>(state.range(0));
  const auto scan = fs::scan(pose, map, lidar, 1);
  for (auto _ : state) benchmark::DoNotOptimize(fn::bendyruler_step(pose, {6, 40}, scan, {}));
}
BENCHMARK(BM_BendyRuler)->Arg(64)->Arg(360);

}  // namespace
