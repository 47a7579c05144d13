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

#include <nlohmann/json.hpp>

#include "fieldrover/yieldkit/image.hpp"

namespace fieldrover::yieldkit {

struct AugmentParams {
  double hue_deg = 0.0;         // [-15, 15], rotation of the hue wheel
  double brightness_pct = 0.0;  // [-15, 15], value *= 1 + pct/100
  double exposure_pct = 0.0;    // [-10, 10], value = value^(1 / (1 + pct/100))
  double blur_px = 0.0;         // [0, 2.5], Gaussian sigma
  double noise_frac = 0.0;      // [0, 0.001], share of pixels replaced

  void validate() const;
  bool identity() const;

  friend bool operator==(const AugmentParams&, const AugmentParams&) = default;
};

/// Draws every knob uniformly from its allowed range.
AugmentParams random_params(std::uint64_t seed);

/// Geometry-preserving photometric augmentation. Zero knobs are skipped, so
/// all-zero parameters return the input unchanged. Noise replaces exactly
/// round(noise_frac * pixels) distinct pixels with random colours that
/// differ from what was there.
Image augment(const Image& image, const AugmentParams& params, std::uint64_t seed);

nlohmann::json params_to_json(const AugmentParams& p);

}  // namespace fieldrover::yieldkit
