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

#include "fieldrover/yieldkit/tiling.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "fieldrover/errors.hpp"

namespace fieldrover::yieldkit {

std::vector<PixelRect> split_tiles(int width_px, int height_px, TileGrid grid) {
  if (grid.cols < 1 || grid.rows < 1 || grid.cols * grid.rows != 6) {
    throw InvalidParameter("tile grid must have exactly 6 cells, got " + std::to_string(grid.cols) + "x" +
                           std::to_string(grid.rows));
  }
  if (width_px < 6 || height_px < 6) throw InvalidParameter("image must be at least 6 px on each side");
  auto edge = [](int i, int total, int parts) {
    return static_cast<int>(static_cast<long long>(i) * total / parts);
  };
  std::vector<PixelRect> tiles;
  tiles.reserve(6);
  for (int r = 0; r < grid.rows; ++r) {
    const int y0 = edge(r, height_px, grid.rows);
    const int y1 = edge(r + 1, height_px, grid.rows);
    for (int c = 0; c < grid.cols; ++c) {
      const int x0 = edge(c, width_px, grid.cols);
      const int x1 = edge(c + 1, width_px, grid.cols);
      PixelRect t{x0, y0, x1 - x0, y1 - y0};
      if (t.area() > kMaxTilePixels) {
        throw InvalidParameter("tile of " + std::to_string(t.area()) + " px exceeds the 12 MP limit");
      }
      tiles.push_back(t);
    }
  }
  return tiles;
}

std::vector<AnnotatedImage> tile_annotations(const AnnotatedImage& image, TileGrid grid) {
  const auto tiles = split_tiles(image.width_px, image.height_px, grid);
  const double W = image.width_px;
  const double H = image.height_px;
  std::vector<AnnotatedImage> out;
  out.reserve(tiles.size());
  for (std::size_t k = 0; k < tiles.size(); ++k) {
    const PixelRect& t = tiles[k];
    AnnotatedImage tile;
    tile.image_id = image.image_id + "_t" + std::to_string(k);
    tile.width_px = t.width;
    tile.height_px = t.height;
    for (const auto& b : image.ground_truth) {
      const double x0 = std::max(b.x_min() * W, double(t.x));
      const double x1 = std::min(b.x_max() * W, double(t.right()));
      const double y0 = std::max(b.y_min() * H, double(t.y));
      const double y1 = std::min(b.y_max() * H, double(t.bottom()));
      if (!(x1 > x0 && y1 > y0)) continue;
      BoundingBox clipped = box_from_corners((x0 - t.x) / t.width, (y0 - t.y) / t.height, (x1 - t.x) / t.width,
                                             (y1 - t.y) / t.height);
      clipped.confidence = b.confidence;
      tile.ground_truth.push_back(clipped);
    }
    out.push_back(std::move(tile));
  }
  return out;
}

bool better_empty_rect(const PixelRect& a, const PixelRect& b) {
  if (a.area() != b.area()) return a.area() > b.area();
  if (a.y != b.y) return a.y < b.y;
  if (a.x != b.x) return a.x < b.x;
  return a.height < b.height;
}

PixelRect largest_empty_rect(int width_px, int height_px, const std::vector<PixelRect>& obstacles) {
  if (width_px < 1 || height_px < 1) throw InvalidParameter("image dimensions must be positive");
  // An inclusion-maximal free rectangle has every edge on the border or on
  // an obstacle edge, so bands between candidate y values are exhaustive.
  std::vector<int> ys{0, height_px};
  for (const auto& o : obstacles) {
    ys.push_back(std::clamp(o.y, 0, height_px));
    ys.push_back(std::clamp(o.bottom(), 0, height_px));
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::optional<PixelRect> best;
  std::vector<std::pair<int, int>> blocked;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      const int y0 = ys[i];
      const int y1 = ys[j];
      blocked.clear();
      for (const auto& o : obstacles) {
        if (o.y < y1 && y0 < o.bottom() && o.width > 0) blocked.emplace_back(o.x, o.right());
      }
      std::sort(blocked.begin(), blocked.end());
      int cursor = 0;
      auto consider = [&](int x0, int x1) {
        if (x1 <= x0) return;
        const PixelRect r{x0, y0, x1 - x0, y1 - y0};
        if (!best || better_empty_rect(r, *best)) best = r;
      };
      for (const auto& [bx0, bx1] : blocked) {
        consider(cursor, std::min(bx0, width_px));
        cursor = std::max(cursor, bx1);
        if (cursor >= width_px) break;
      }
      consider(cursor, width_px);
    }
  }
  if (!best) throw EmptyResult("ground-truth boxes cover the whole image");
  return *best;
}

PixelRect largest_empty_rect(const AnnotatedImage& image) {
  std::vector<PixelRect> obstacles;
  obstacles.reserve(image.ground_truth.size());
  for (const auto& b : image.ground_truth) {
    obstacles.push_back(covering_pixels(b, image.width_px, image.height_px));
  }
  return largest_empty_rect(image.width_px, image.height_px, obstacles);
}

}  // namespace fieldrover::yieldkit
