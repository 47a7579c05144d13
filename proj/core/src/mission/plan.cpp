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

#include "fieldrover/mission/plan.hpp"

#include <cmath>
#include <fstream>

#include "fieldrover/errors.hpp"
#include "json_util.hpp"

namespace fieldrover::mission {

using nlohmann::json;

void MissionPlan::validate(const world::RoverParams& rover) const {
  if (waypoints.empty()) throw InvalidParameter("mission needs at least one waypoint");
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    const auto& w = waypoints[i];
    const std::string tag = "waypoint " + std::to_string(i);
    if (!std::isfinite(w.position.x) || !std::isfinite(w.position.y)) {
      throw InvalidParameter(tag + ": position not finite");
    }
    if (!(w.acceptance_radius > 0.0)) throw InvalidParameter(tag + ": acceptance_radius must be > 0");
    if (!(w.speed > 0.0) || w.speed > rover.max_speed) {
      throw InvalidParameter(tag + ": speed outside (0, max_speed]");
    }
  }
}

MissionPlan mission_from_json(const json& doc, const std::optional<world::GeoPoint>& anchor) {
  detail::require_object(doc, "mission");
  detail::reject_unknown_keys(doc, "mission", {"frame", "waypoints", "home"});
  const std::string frame = doc.contains("frame") ? detail::get_string(doc, "frame", "mission") : "local";
  if (frame != "local" && frame != "geo") throw ParseError("mission: frame must be 'local' or 'geo'");
  if (frame == "geo" && !anchor) throw ParseError("mission: geo frame needs a geo-anchored world");

  auto it = doc.find("waypoints");
  if (it == doc.end() || !it->is_array()) throw ParseError("mission: 'waypoints' must be an array");
  MissionPlan plan;
  for (const auto& w : *it) {
    detail::require_object(w, "waypoint");
    Waypoint wp;
    if (frame == "local") {
      detail::reject_unknown_keys(w, "waypoint", {"x", "y", "speed", "acceptance_radius", "trigger_camera"});
      wp.position = {detail::get_number(w, "x", "waypoint"), detail::get_number(w, "y", "waypoint")};
    } else {
      detail::reject_unknown_keys(w, "waypoint", {"lat", "lon", "speed", "acceptance_radius", "trigger_camera"});
      wp.position = world::geo_to_local(
          *anchor, {detail::get_number(w, "lat", "waypoint"), detail::get_number(w, "lon", "waypoint")});
    }
    wp.speed = detail::get_number_or(w, "speed", wp.speed, "waypoint");
    wp.acceptance_radius = detail::get_number_or(w, "acceptance_radius", wp.acceptance_radius, "waypoint");
    wp.trigger_camera = detail::get_bool_or(w, "trigger_camera", false, "waypoint");
    plan.waypoints.push_back(wp);
  }
  if (auto h = doc.find("home"); h != doc.end()) {
    detail::require_object(*h, "home");
    HomePose home;
    if (frame == "local") {
      detail::reject_unknown_keys(*h, "home", {"x", "y", "heading_deg"});
      home.position = {detail::get_number(*h, "x", "home"), detail::get_number(*h, "y", "home")};
    } else {
      detail::reject_unknown_keys(*h, "home", {"lat", "lon", "heading_deg"});
      home.position = world::geo_to_local(
          *anchor, {detail::get_number(*h, "lat", "home"), detail::get_number(*h, "lon", "home")});
    }
    home.heading_deg = detail::get_number_or(*h, "heading_deg", 0.0, "home");
    plan.home = home;
  }
  return plan;
}

json mission_to_json(const MissionPlan& plan) {
  json doc{{"frame", "local"}, {"waypoints", json::array()}};
  for (const auto& w : plan.waypoints) {
    doc["waypoints"].push_back({{"x", w.position.x},
                                {"y", w.position.y},
                                {"speed", w.speed},
                                {"acceptance_radius", w.acceptance_radius},
                                {"trigger_camera", w.trigger_camera}});
  }
  if (plan.home) {
    doc["home"] = {{"x", plan.home->position.x}, {"y", plan.home->position.y}, {"heading_deg", plan.home->heading_deg}};
  }
  return doc;
}

MissionPlan load_mission(const std::filesystem::path& path, const std::optional<world::GeoPoint>& anchor) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mission file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError("mission file " + path.string() + ": " + e.what());
  }
  return mission_from_json(doc, anchor);
}

}  // namespace fieldrover::mission
