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

#include "fieldrover/sensors/gps.hpp"

#include <cmath>

#include "fieldrover/errors.hpp"
#include "fieldrover/random.hpp"
#include "json_util.hpp"

namespace fieldrover::sensors {

std::string_view to_string(FixType type) {
  switch (type) {
    case FixType::None: return "NONE";
    case FixType::Gps3d: return "GPS_3D";
    case FixType::RtkFloat: return "RTK_FLOAT";
    case FixType::RtkFixed: return "RTK_FIXED";
  }
  return "NONE";
}

FixType fix_type_from_string(std::string_view text) {
  if (text == "NONE") return FixType::None;
  if (text == "GPS_3D") return FixType::Gps3d;
  if (text == "RTK_FLOAT") return FixType::RtkFloat;
  if (text == "RTK_FIXED") return FixType::RtkFixed;
  throw ParseError("unknown fix type '" + std::string(text) + "'");
}

double GpsConfig::sigma_for(FixType type) const {
  switch (type) {
    case FixType::Gps3d: return sigma_gps3d_m;
    case FixType::RtkFloat: return sigma_rtk_float_m;
    case FixType::RtkFixed: return sigma_rtk_fixed_m;
    case FixType::None: break;
  }
  return 0.0;
}

GpsFix GpsReceiver::measure(const world::RoverState& truth, FixType mode, std::uint64_t seed) const {
  if (mode == FixType::None) throw NoFix("cannot measure with fix type NONE");
  const double sigma = cfg_.sigma_for(mode);
  const double axis_sigma = sigma / std::sqrt(2.0);
  Rng rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  const double ex = n(rng);
  const double ey = n(rng);
  GpsFix fix;
  fix.position = Vec2{truth.x + bias_.x + axis_sigma * ex, truth.y + bias_.y + axis_sigma * ey};
  fix.fix_type = mode;
  fix.horizontal_sigma_m = sigma;
  return fix;
}

void GpsReceiver::advance_bias(double dt, std::uint64_t seed) {
  if (!(dt > 0.0) || !(cfg_.bias_tau_s > 0.0)) return;
  const double phi = std::exp(-dt / cfg_.bias_tau_s);
  const double drive = std::sqrt(1.0 - phi * phi) * cfg_.bias_sigma_m / std::sqrt(2.0);
  Rng rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  const double nx = n(rng);
  const double ny = n(rng);
  bias_ = {bias_.x * phi + drive * nx, bias_.y * phi + drive * ny};
}

RtkCorrection base_station_correction(Vec2 base_known, Vec2 base_measured, double t) {
  return {t, base_known.x - base_measured.x, base_known.y - base_measured.y};
}

nlohmann::json correction_to_json(const RtkCorrection& c) {
  return {{"t", c.t}, {"dx", c.dx}, {"dy", c.dy}};
}

RtkCorrection correction_from_json(const nlohmann::json& doc) {
  detail::require_object(doc, "correction");
  detail::reject_unknown_keys(doc, "correction", {"t", "dx", "dy"});
  return {detail::get_number(doc, "t", "correction"), detail::get_number(doc, "dx", "correction"),
          detail::get_number(doc, "dy", "correction")};
}

FixType RtkCorrector::observe(const std::optional<RtkCorrection>& latest, double now) {
  const bool fresh = latest && now - latest->t <= cfg_.staleness_s;
  if (!fresh) {
    stream_start_.reset();
    last_correction_t_.reset();
    return FixType::Gps3d;
  }
  if (!stream_start_ || (last_correction_t_ && latest->t - *last_correction_t_ > cfg_.staleness_s)) {
    stream_start_ = latest->t;
  }
  last_correction_t_ = latest->t;
  return now - *stream_start_ >= cfg_.fix_hold_s ? FixType::RtkFixed : FixType::RtkFloat;
}

GpsFix RtkCorrector::apply(const GpsFix& fix, const std::optional<RtkCorrection>& latest, double now) {
  const FixType regime = observe(latest, now);
  if (!fix.has_position()) return fix;
  GpsFix out = fix;
  if (regime == FixType::Gps3d) {
    if (out.fix_type == FixType::RtkFloat || out.fix_type == FixType::RtkFixed) {
      out.fix_type = FixType::Gps3d;
      out.horizontal_sigma_m = gps_.sigma_gps3d_m;
    }
    return out;
  }
  out.position = Vec2{fix.position->x + latest->dx, fix.position->y + latest->dy};
  out.fix_type = regime;
  out.horizontal_sigma_m = gps_.sigma_for(regime);
  return out;
}

}  // namespace fieldrover::sensors
