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

#include <optional>

namespace fieldrover::yieldkit {

/// Axis-aligned box in normalized image coordinates (fractions of width and
/// height). Ground truth leaves `confidence` empty; predictions set it.
struct BoundingBox {
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;
  std::optional<double> confidence;

  double x_min() const { return cx - w / 2.0; }
  double x_max() const { return cx + w / 2.0; }
  double y_min() const { return cy - h / 2.0; }
  double y_max() const { return cy + h / 2.0; }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

BoundingBox box_from_corners(double x_min, double y_min, double x_max, double y_max);

/// Throws InvalidParameter unless w, h > 0, the box lies in [0,1]^2 (with a
/// small rounding allowance) and any confidence is in [0,1].
void validate(const BoundingBox& box);

double iou(const BoundingBox& a, const BoundingBox& b);

/// Integer pixel rectangle, half-open: [x, x + width) x [y, y + height).
struct PixelRect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  long long area() const { return static_cast<long long>(width) * height; }
  int right() const { return x + width; }
  int bottom() const { return y + height; }

  friend bool operator==(const PixelRect&, const PixelRect&) = default;
};

/// Smallest pixel rectangle covering `box` on a width_px x height_px image.
PixelRect covering_pixels(const BoundingBox& box, int width_px, int height_px);

/// True when the open interiors overlap.
bool interiors_overlap(const PixelRect& a, const PixelRect& b);

}  // namespace fieldrover::yieldkit
