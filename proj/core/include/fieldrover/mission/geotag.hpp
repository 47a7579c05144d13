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
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fieldrover/sensors/gps.hpp"
#include "fieldrover/world/field_map.hpp"

namespace fieldrover::mission {

struct GeotagRecord {
  std::string image_id;
  double t = 0.0;
  sensors::GpsFix fix;
  int waypoint_index = 0;

  friend bool operator==(const GeotagRecord&, const GeotagRecord&) = default;
};

enum class GeotagFormat { Csv, GeoJson };

/// Deterministic capture id: img_0001, img_0002, ...
std::string capture_image_id(int n);

// CSV header, local frame: image_id,t,x,y,fix_type,waypoint_index,sigma_m
// CSV header, geo frame:   image_id,t,lat,lon,fix_type,waypoint_index,x,y,sigma_m
// Numbers are written in shortest round-trip form. lat/lon are derived from
// x/y through the anchor; x/y stay authoritative so parsing is lossless.
//
// GeoJSON: FeatureCollection of Points ([lon, lat] when anchored, else
// [x, y]) with properties image_id, t, fix_type, waypoint_index, x, y,
// sigma_m.
//
// Records with a NONE fix are refused with RecordRejected. image_id must be
// non-empty and drawn from [A-Za-z0-9_.-].

std::string export_geotags(const std::vector<GeotagRecord>& records, GeotagFormat format,
                           const std::optional<world::GeoPoint>& anchor = std::nullopt);
std::vector<GeotagRecord> parse_geotags(std::string_view document, GeotagFormat format);

/// One GeoJSON Feature for a record; callers may add properties.
nlohmann::json geotag_feature(const GeotagRecord& record, const std::optional<world::GeoPoint>& anchor);
GeotagRecord geotag_from_feature(const nlohmann::json& feature);

}  // namespace fieldrover::mission
