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

#include "fieldrover/yieldkit/yield.hpp"

#include <map>

namespace fieldrover::yieldkit {

YieldReport yield_count(const std::vector<ImagePredictions>& detections, const EvalConfig& cfg,
                        const std::vector<mission::GeotagRecord>& geotags) {
  std::map<std::string, long> counts;
  for (const auto& d : detections) {
    long n = 0;
    for (const auto& b : d.pred) {
      if (b.confidence.value_or(1.0) >= cfg.confidence_threshold) ++n;
    }
    counts[d.image_id] += n;
  }
  YieldReport rep;
  std::map<std::string, bool> located;
  for (const auto& g : geotags) {
    const auto it = counts.find(g.image_id);
    const long n = it == counts.end() ? 0 : it->second;
    rep.located.push_back({g, n});
    rep.total += n;
    located[g.image_id] = true;
  }
  for (const auto& d : detections) {
    if (!located.count(d.image_id)) {
      rep.skipped.push_back(d.image_id);
      located[d.image_id] = true;  // report each id once
    }
  }
  return rep;
}

nlohmann::json yield_to_geojson(const YieldReport& report, const std::optional<world::GeoPoint>& anchor) {
  nlohmann::json features = nlohmann::json::array();
  for (const auto& e : report.located) {
    auto f = mission::geotag_feature(e.geotag, anchor);
    f["properties"]["count"] = e.count;
    features.push_back(std::move(f));
  }
  return {{"type", "FeatureCollection"},
          {"features", features},
          {"total", report.total},
          {"skipped", report.skipped}};
}

}  // namespace fieldrover::yieldkit
