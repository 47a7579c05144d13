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

#include "fieldrover/yieldkit/box.hpp"

#include <algorithm>
#include <cmath>

#include "fieldrover/errors.hpp"

namespace fieldrover::yieldkit {

namespace {
constexpr double kSlack = 1e-9;
}

BoundingBox box_from_corners(double x_min, double y_min, double x_max, double y_max) {
  return {(x_min + x_max) / 2.0, (y_min + y_max) / 2.0, x_max - x_min, y_max - y_min, std::nullopt};
}

void validate(const BoundingBox& b) {
  if (!(b.w > 0.0) || !(b.h > 0.0)) throw InvalidParameter("box width and height must be positive");
  if (!std::isfinite(b.cx) || !std::isfinite(b.cy) || b.x_min() < -kSlack || b.y_min() < -kSlack ||
      b.x_max() > 1.0 + kSlack || b.y_max() > 1.0 + kSlack) {
    throw InvalidParameter("box extends outside the unit square");
  }
  if (b.confidence && !(*b.confidence >= 0.0 && *b.confidence <= 1.0)) {
    throw InvalidParameter("confidence outside [0,1]");
  }
}

double iou(const BoundingBox& a, const BoundingBox& b) {
  const double ix = std::max(0.0, std::min(a.x_max(), b.x_max()) - std::max(a.x_min(), b.x_min()));
  const double iy = std::max(0.0, std::min(a.y_max(), b.y_max()) - std::max(a.y_min(), b.y_min()));
  const double inter = ix * iy;
  if (inter <= 0.0) return 0.0;
  const double uni = a.w * a.h + b.w * b.h - inter;
  return std::min(1.0, inter / uni);
}

PixelRect covering_pixels(const BoundingBox& box, int width_px, int height_px) {
  auto lo = [](double v, int n) { return std::clamp(static_cast<int>(std::floor(v * n + kSlack)), 0, n); };
  auto hi = [](double v, int n) { return std::clamp(static_cast<int>(std::ceil(v * n - kSlack)), 0, n); };
  const int x0 = lo(box.x_min(), width_px);
  const int y0 = lo(box.y_min(), height_px);
  const int x1 = std::max(hi(box.x_max(), width_px), std::min(x0 + 1, width_px));
  const int y1 = std::max(hi(box.y_max(), height_px), std::min(y0 + 1, height_px));
  return {x0, y0, x1 - x0, y1 - y0};
}

bool interiors_overlap(const PixelRect& a, const PixelRect& b) {
  return a.x < b.right() && b.x < a.right() && a.y < b.bottom() && b.y < a.bottom();
}

}  // namespace fieldrover::yieldkit
