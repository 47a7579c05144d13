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
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fieldrover/geometry.hpp"
#include "fieldrover/world/kinematics.hpp"

namespace fieldrover::sensors {

enum class FixType { None, Gps3d, RtkFloat, RtkFixed };

std::string_view to_string(FixType type);
/// Parses "NONE", "GPS_3D", "RTK_FLOAT", "RTK_FIXED"; throws ParseError otherwise.
FixType fix_type_from_string(std::string_view text);

struct GpsFix {
  std::optional<Vec2> position;  // empty iff fix_type == None
  FixType fix_type = FixType::None;
  double horizontal_sigma_m = 0.0;

  bool has_position() const { return position.has_value(); }
  friend bool operator==(const GpsFix&, const GpsFix&) = default;
};

/// Error model: slowly varying shared bias (first-order Gauss-Markov, shared
/// with any nearby base station) plus white receiver noise. Sigmas are
/// horizontal RMS values; each axis gets sigma / sqrt(2).
struct GpsConfig {
  double sigma_gps3d_m = 2.5;
  double sigma_rtk_float_m = 0.3;
  double sigma_rtk_fixed_m = 0.02;
  double bias_sigma_m = 1.5;
  double bias_tau_s = 300.0;

  double sigma_for(FixType type) const;
};

class GpsReceiver {
 public:
  explicit GpsReceiver(GpsConfig cfg = {}) : cfg_(cfg) {}

  /// truth + bias + noise(sigma of `mode`). Throws NoFix for FixType::None.
  GpsFix measure(const world::RoverState& truth, FixType mode, std::uint64_t seed) const;

  /// Advances the shared bias by one epoch of length dt.
  void advance_bias(double dt, std::uint64_t seed);

  Vec2 bias() const { return bias_; }
  void set_bias(Vec2 b) { bias_ = b; }
  const GpsConfig& config() const { return cfg_; }

 private:
  GpsConfig cfg_;
  Vec2 bias_{};
};

struct RtkCorrection {
  double t = 0.0;
  double dx = 0.0;
  double dy = 0.0;

  friend bool operator==(const RtkCorrection&, const RtkCorrection&) = default;
};

/// Correction a base station at `base_known` broadcasts after measuring
/// itself at `base_measured`: known - measured.
RtkCorrection base_station_correction(Vec2 base_known, Vec2 base_measured, double t);

/// NDJSON wire record {"t":..,"dx":..,"dy":..}.
nlohmann::json correction_to_json(const RtkCorrection& c);
RtkCorrection correction_from_json(const nlohmann::json& doc);

struct RtkConfig {
  double fix_hold_s = 5.0;
  double staleness_s = 3.0;
};

/// Applies corrections to rover fixes and tracks the solution regime.
/// A fresh correction (age <= staleness_s) yields RTK_FLOAT; once the
/// stream has been continuous for fix_hold_s the regime is RTK_FIXED.
/// A stale or missing correction leaves the position untouched and
/// downgrades any RTK fix to GPS_3D.
class RtkCorrector {
 public:
  explicit RtkCorrector(RtkConfig cfg = {}, GpsConfig gps = {}) : cfg_(cfg), gps_(gps) {}

  /// Updates stream continuity and returns the regime at `now`. Repeated
  /// calls with the same arguments are idempotent.
  FixType observe(const std::optional<RtkCorrection>& latest, double now);

  GpsFix apply(const GpsFix& fix, const std::optional<RtkCorrection>& latest, double now);

  const RtkConfig& config() const { return cfg_; }

 private:
  RtkConfig cfg_;
  GpsConfig gps_;
  std::optional<double> stream_start_;
  std::optional<double> last_correction_t_;
};

}  // namespace fieldrover::sensors
