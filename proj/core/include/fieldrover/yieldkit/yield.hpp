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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fieldrover/mission/geotag.hpp"
#include "fieldrover/yieldkit/box.hpp"
#include "fieldrover/yieldkit/metrics.hpp"

namespace fieldrover::yieldkit {

struct ImagePredictions {
  std::string image_id;
  std::vector<BoundingBox> pred;
};

struct YieldEntry {
  mission::GeotagRecord geotag;
  long count = 0;
};

struct YieldReport {
  std::vector<YieldEntry> located;  // in geotag order
  long total = 0;                   // sum over located images
  std::vector<std::string> skipped; // detection ids with no geotag
};

/// Counts predictions at or above the confidence threshold per image and
/// joins them to capture locations by image id. Geotagged images without a
/// detection file count zero.
YieldReport yield_count(const std::vector<ImagePredictions>& detections, const EvalConfig& cfg,
                        const std::vector<mission::GeotagRecord>& geotags);

/// Geotag-compatible FeatureCollection with an added "count" property.
nlohmann::json yield_to_geojson(const YieldReport& report, const std::optional<world::GeoPoint>& anchor);

}  // namespace fieldrover::yieldkit
