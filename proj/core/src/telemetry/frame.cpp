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

#include "fieldrover/telemetry/frame.hpp"

#include <cmath>

#include "fieldrover/errors.hpp"
#include "json_util.hpp"

namespace fieldrover::telemetry {

using nlohmann::json;

TelemetryFrame make_frame(const mission::Snapshot& snap, std::vector<mission::MissionEvent> events,
                          const std::optional<world::GeoPoint>& anchor) {
  TelemetryFrame f;
  f.t = snap.t;
  f.mode = snap.state;
  f.armed = snap.state != mission::MissionState::Disarmed;
  f.position = snap.fix.position;
  if (anchor && f.position) f.geo = world::local_to_geo(*anchor, *f.position);
  f.true_position = snap.truth.position();
  f.heading_deg = rad_to_deg(snap.truth.heading);
  f.ground_speed = snap.truth.speed;
  f.distance_to_waypoint = snap.distance_to_waypoint;
  f.next_waypoint = snap.next_waypoint;
  f.battery_v = snap.truth.battery_v;
  f.fix_type = snap.fix.fix_type;
  f.led_state = snap.led;
  f.odometer_m = snap.odometer_m;
  if (std::isfinite(snap.min_clearance_m)) f.min_clearance_m = snap.min_clearance_m;
  f.collisions = snap.collisions;
  f.captures = snap.captures;
  if (!events.empty()) f.last_event = events.back();
  f.events = std::move(events);
  return f;
}

json frame_to_json(const TelemetryFrame& f) {
  json j{{"type", "frame"},
         {"t", f.t},
         {"mode", mission::to_string(f.mode)},
         {"armed", f.armed},
         {"x", f.position ? json(f.position->x) : json(nullptr)},
         {"y", f.position ? json(f.position->y) : json(nullptr)},
         {"true_x", f.true_position.x},
         {"true_y", f.true_position.y},
         {"heading", f.heading_deg},
         {"ground_speed", f.ground_speed},
         {"altitude", f.altitude_m},
         {"distance_to_waypoint", f.distance_to_waypoint},
         {"next_waypoint", f.next_waypoint},
         {"battery_v", f.battery_v},
         {"fix_type", sensors::to_string(f.fix_type)},
         {"led_state", mission::to_string(f.led_state)},
         {"odometer_m", f.odometer_m},
         {"min_clearance_m", f.min_clearance_m ? json(*f.min_clearance_m) : json(nullptr)},
         {"collisions", f.collisions},
         {"captures", f.captures},
         {"events", json::array()},
         {"last_event", f.last_event ? mission::event_to_json(*f.last_event) : json(nullptr)}};
  if (f.geo) {
    j["lat"] = f.geo->lat_deg;
    j["lon"] = f.geo->lon_deg;
  }
  for (const auto& e : f.events) j["events"].push_back(mission::event_to_json(e));
  return j;
}

TelemetryFrame frame_from_json(const json& doc) {
  detail::require_object(doc, "frame");
  if (doc.value("type", "") != "frame") throw ParseError("frame: type must be 'frame'");
  TelemetryFrame f;
  f.t = detail::get_number(doc, "t", "frame");
  f.mode = mission::mission_state_from_string(detail::get_string(doc, "mode", "frame"));
  f.armed = doc.at("armed").get<bool>();
  if (!doc.at("x").is_null()) {
    f.position = Vec2{detail::get_number(doc, "x", "frame"), detail::get_number(doc, "y", "frame")};
  }
  if (doc.contains("lat")) {
    f.geo = world::GeoPoint{detail::get_number(doc, "lat", "frame"), detail::get_number(doc, "lon", "frame")};
  }
  f.true_position = {detail::get_number(doc, "true_x", "frame"), detail::get_number(doc, "true_y", "frame")};
  f.heading_deg = detail::get_number(doc, "heading", "frame");
  f.ground_speed = detail::get_number(doc, "ground_speed", "frame");
  f.altitude_m = detail::get_number(doc, "altitude", "frame");
  f.distance_to_waypoint = detail::get_number(doc, "distance_to_waypoint", "frame");
  f.next_waypoint = doc.at("next_waypoint").get<int>();
  f.battery_v = detail::get_number(doc, "battery_v", "frame");
  f.fix_type = sensors::fix_type_from_string(detail::get_string(doc, "fix_type", "frame"));
  f.led_state = mission::led_state_from_string(detail::get_string(doc, "led_state", "frame"));
  f.odometer_m = detail::get_number(doc, "odometer_m", "frame");
  if (!doc.at("min_clearance_m").is_null()) f.min_clearance_m = detail::get_number(doc, "min_clearance_m", "frame");
  f.collisions = doc.at("collisions").get<int>();
  f.captures = doc.at("captures").get<int>();
  for (const auto& e : doc.at("events")) f.events.push_back(mission::event_from_json(e));
  if (!doc.at("last_event").is_null()) f.last_event = mission::event_from_json(doc.at("last_event"));
  return f;
}

}  // namespace fieldrover::telemetry
