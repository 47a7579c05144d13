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

#include <vector>

#include "fieldrover/yieldkit/box.hpp"
#include "fieldrover/yieldkit/dataset.hpp"

namespace fieldrover::yieldkit {

struct TileGrid {
  int cols = 3;
  int rows = 2;
};

/// Upload limit a single tile must respect, in pixels.
inline constexpr long long kMaxTilePixels = 12'000'000;

/// Near-equal integer partition of the image into cols x rows tiles,
/// row-major. Edges sit at floor(i * width / cols), so leftover pixels
/// spread toward the later columns and rows (9152 over 3 gives 3050, 3051,
/// 3051). Throws InvalidParameter unless cols * rows == 6, both sides are at
/// least 6 px, and every tile fits kMaxTilePixels.
std::vector<PixelRect> split_tiles(int width_px, int height_px, TileGrid grid = {});

/// Tiles an annotated image: ids become "<id>_t<k>", and each box is clipped
/// to every tile it overlaps with positive area, renormalized to the tile.
std::vector<AnnotatedImage> tile_annotations(const AnnotatedImage& image, TileGrid grid = {});

/// Largest axis-aligned pixel rectangle whose interior misses every
/// ground-truth box. Boxes are first grown to whole pixels. Ties go to the
/// smallest top, then smallest left, then smallest height. Throws
/// EmptyResult when the boxes leave no free pixel.
PixelRect largest_empty_rect(const AnnotatedImage& image);

/// Same search over explicit pixel obstacles on a width x height canvas.
PixelRect largest_empty_rect(int width_px, int height_px, const std::vector<PixelRect>& obstacles);

/// Tie-break order used by largest_empty_rect: true when `a` is preferred.
bool better_empty_rect(const PixelRect& a, const PixelRect& b);

}  // namespace fieldrover::yieldkit
