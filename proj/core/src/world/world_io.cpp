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

#include "fieldrover/world/world_io.hpp"

#include <fstream>

#include "fieldrover/errors.hpp"
#include "json_util.hpp"

namespace fieldrover::world {

using nlohmann::json;
using detail::get_number;

Obstacle obstacle_from_json(const json& doc) {
  detail::require_object(doc, "obstacle");
  const std::string kind = detail::get_string(doc, "kind", "obstacle");
  if (kind == "rect") {
    detail::reject_unknown_keys(doc, "rect obstacle", {"kind", "x_min", "y_min", "x_max", "y_max"});
    return RectObstacle{get_number(doc, "x_min", "rect"), get_number(doc, "y_min", "rect"),
                        get_number(doc, "x_max", "rect"), get_number(doc, "y_max", "rect")};
  }
  if (kind == "circle") {
    detail::reject_unknown_keys(doc, "circle obstacle", {"kind", "cx", "cy", "radius"});
    return CircleObstacle{get_number(doc, "cx", "circle"), get_number(doc, "cy", "circle"),
                          get_number(doc, "radius", "circle")};
  }
  throw ParseError("obstacle: unknown kind '" + kind + "'");
}

json obstacle_to_json(const Obstacle& obstacle) {
  return std::visit(
      [](const auto& o) -> json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, RectObstacle>) {
          return {{"kind", "rect"}, {"x_min", o.x_min}, {"y_min", o.y_min},
                  {"x_max", o.x_max}, {"y_max", o.y_max}};
        } else {
          return {{"kind", "circle"}, {"cx", o.cx}, {"cy", o.cy}, {"radius", o.radius}};
        }
      },
      obstacle);
}

FieldMap field_map_from_json(const json& doc) {
  detail::require_object(doc, "world");
  detail::reject_unknown_keys(doc, "world", {"width_m", "height_m", "origin_geo", "obstacles"});
  FieldMap map;
  map.width_m = get_number(doc, "width_m", "world");
  map.height_m = get_number(doc, "height_m", "world");
  if (auto it = doc.find("origin_geo"); it != doc.end() && !it->is_null()) {
    detail::require_object(*it, "origin_geo");
    detail::reject_unknown_keys(*it, "origin_geo", {"lat_deg", "lon_deg"});
    map.origin_geo = GeoPoint{get_number(*it, "lat_deg", "origin_geo"),
                              get_number(*it, "lon_deg", "origin_geo")};
  }
  if (auto it = doc.find("obstacles"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("world: 'obstacles' must be an array");
    for (const auto& o : *it) map.obstacles.push_back(obstacle_from_json(o));
  }
  try {
    map.validate();
  } catch (const InvalidParameter& e) {
    throw ParseError(std::string("world: ") + e.what());
  }
  return map;
}

json field_map_to_json(const FieldMap& map) {
  json doc{{"width_m", map.width_m}, {"height_m", map.height_m}, {"obstacles", json::array()}};
  if (map.origin_geo) {
    doc["origin_geo"] = {{"lat_deg", map.origin_geo->lat_deg}, {"lon_deg", map.origin_geo->lon_deg}};
  }
  for (const auto& o : map.obstacles) doc["obstacles"].push_back(obstacle_to_json(o));
  return doc;
}

FieldMap load_field_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open world file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError("world file " + path.string() + ": " + e.what());
  }
  return field_map_from_json(doc);
}

}  // namespace fieldrover::world
