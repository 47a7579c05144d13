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

#include "fieldrover/mission/geotag.hpp"

#include <cstdio>
#include <sstream>

#include "fieldrover/errors.hpp"
#include "json_util.hpp"
#include "text_util.hpp"

namespace fieldrover::mission {

using nlohmann::json;
using detail::format_double;

namespace {

constexpr std::string_view kLocalHeader = "image_id,t,x,y,fix_type,waypoint_index,sigma_m";
constexpr std::string_view kGeoHeader = "image_id,t,lat,lon,fix_type,waypoint_index,x,y,sigma_m";

void check_record(const GeotagRecord& r) {
  if (r.fix.fix_type == sensors::FixType::None || !r.fix.has_position()) {
    throw RecordRejected("geotag " + r.image_id + " has no GPS fix");
  }
  if (r.image_id.empty()) throw RecordRejected("geotag with empty image_id");
  for (char c : r.image_id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-' || c == '.';
    if (!ok) throw RecordRejected("geotag image_id '" + r.image_id + "' has unsupported characters");
  }
  if (r.waypoint_index < 0) throw RecordRejected("geotag " + r.image_id + " has negative waypoint index");
}

bool has_type(const json& doc, std::string_view type) {
  if (!doc.is_object()) return false;
  auto it = doc.find("type");
  return it != doc.end() && it->is_string() && it->get_ref<const std::string&>() == type;
}

double need_double(std::string_view field, std::size_t line_no) {
  auto v = detail::parse_double(field);
  if (!v) throw ParseError("geotag csv line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'");
  return *v;
}

}  // namespace

std::string capture_image_id(int n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "img_%04d", n);
  return buf;
}

json geotag_feature(const GeotagRecord& r, const std::optional<world::GeoPoint>& anchor) {
  check_record(r);
  const Vec2 p = *r.fix.position;
  json coords;
  if (anchor) {
    const auto g = world::local_to_geo(*anchor, p);
    coords = json::array({g.lon_deg, g.lat_deg});
  } else {
    coords = json::array({p.x, p.y});
  }
  return {{"type", "Feature"},
          {"geometry", {{"type", "Point"}, {"coordinates", coords}}},
          {"properties",
           {{"image_id", r.image_id},
            {"t", r.t},
            {"fix_type", sensors::to_string(r.fix.fix_type)},
            {"waypoint_index", r.waypoint_index},
            {"x", p.x},
            {"y", p.y},
            {"sigma_m", r.fix.horizontal_sigma_m}}}};
}

GeotagRecord geotag_from_feature(const json& feature) {
  if (!has_type(feature, "Feature") || !feature.contains("properties")) {
    throw ParseError("geojson: expected a Feature with properties");
  }
  const json& p = feature.at("properties");
  GeotagRecord r;
  r.image_id = detail::get_string(p, "image_id", "geotag");
  r.t = detail::get_number(p, "t", "geotag");
  r.fix.fix_type = sensors::fix_type_from_string(detail::get_string(p, "fix_type", "geotag"));
  r.fix.position = Vec2{detail::get_number(p, "x", "geotag"), detail::get_number(p, "y", "geotag")};
  r.fix.horizontal_sigma_m = detail::get_number(p, "sigma_m", "geotag");
  if (!p.contains("waypoint_index") || !p.at("waypoint_index").is_number_integer()) {
    throw ParseError("geotag: waypoint_index must be an integer");
  }
  r.waypoint_index = p.at("waypoint_index").get<int>();
  return r;
}

std::string export_geotags(const std::vector<GeotagRecord>& records, GeotagFormat format,
                           const std::optional<world::GeoPoint>& anchor) {
  for (const auto& r : records) check_record(r);

  if (format == GeotagFormat::GeoJson) {
    json doc{{"type", "FeatureCollection"}, {"features", json::array()}};
    for (const auto& r : records) doc["features"].push_back(geotag_feature(r, anchor));
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << (anchor ? kGeoHeader : kLocalHeader) << '\n';
  for (const auto& r : records) {
    const Vec2 p = *r.fix.position;
    os << r.image_id << ',' << format_double(r.t) << ',';
    if (anchor) {
      const auto g = world::local_to_geo(*anchor, p);
      os << format_double(g.lat_deg) << ',' << format_double(g.lon_deg) << ',';
    } else {
      os << format_double(p.x) << ',' << format_double(p.y) << ',';
    }
    os << sensors::to_string(r.fix.fix_type) << ',' << r.waypoint_index << ',';
    if (anchor) os << format_double(p.x) << ',' << format_double(p.y) << ',';
    os << format_double(r.fix.horizontal_sigma_m) << '\n';
  }
  return os.str();
}

std::vector<GeotagRecord> parse_geotags(std::string_view document, GeotagFormat format) {
  std::vector<GeotagRecord> out;
  if (format == GeotagFormat::GeoJson) {
    json doc;
    try {
      doc = json::parse(document);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("geojson: ") + e.what());
    }
    if (!has_type(doc, "FeatureCollection") || !doc.contains("features") ||
        !doc.at("features").is_array()) {
      throw ParseError("geojson: expected a FeatureCollection");
    }
    for (const auto& f : doc.at("features")) out.push_back(geotag_from_feature(f));
    return out;
  }

  const auto lines = detail::split(document, '\n');
  if (lines.empty()) throw ParseError("geotag csv: missing header");
  const std::string_view header = detail::trim_cr(lines.front());
  const bool geo = header == kGeoHeader;
  if (!geo && header != kLocalHeader) throw ParseError("geotag csv: unrecognized header");
  const std::size_t n_fields = geo ? 9 : 7;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = detail::trim_cr(lines[i]);
    if (line.empty()) continue;
    const auto f = detail::split(line, ',');
    if (f.size() != n_fields) {
      throw ParseError("geotag csv line " + std::to_string(i + 1) + ": expected " +
                       std::to_string(n_fields) + " fields");
    }
    GeotagRecord r;
    r.image_id = std::string(f[0]);
    r.t = need_double(f[1], i + 1);
    r.fix.fix_type = sensors::fix_type_from_string(f[4]);
    auto wp = detail::parse_int(f[5]);
    if (!wp) throw ParseError("geotag csv line " + std::to_string(i + 1) + ": bad waypoint_index");
    r.waypoint_index = static_cast<int>(*wp);
    if (geo) {
      need_double(f[2], i + 1);
      need_double(f[3], i + 1);
      r.fix.position = Vec2{need_double(f[6], i + 1), need_double(f[7], i + 1)};
      r.fix.horizontal_sigma_m = need_double(f[8], i + 1);
    } else {
      r.fix.position = Vec2{need_double(f[2], i + 1), need_double(f[3], i + 1)};
      r.fix.horizontal_sigma_m = need_double(f[6], i + 1);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace fieldrover::mission
