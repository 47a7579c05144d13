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

#include <filesystem>

#include <nlohmann/json.hpp>

#include "fieldrover/world/field_map.hpp"

namespace fieldrover::world {

// World file schema:
//   {"width_m": 40, "height_m": 30, "origin_geo": {"lat_deg": .., "lon_deg": ..},
//    "obstacles": [{"kind": "rect", "x_min":.., "y_min":.., "x_max":.., "y_max":..},
//                  {"kind": "circle", "cx":.., "cy":.., "radius":..}]}
// origin_geo is optional. Unknown keys are rejected with ParseError.

FieldMap field_map_from_json(const nlohmann::json& doc);
nlohmann::json field_map_to_json(const FieldMap& map);
FieldMap load_field_map(const std::filesystem::path& path);

nlohmann::json obstacle_to_json(const Obstacle& obstacle);
Obstacle obstacle_from_json(const nlohmann::json& doc);

}  // namespace fieldrover::world
