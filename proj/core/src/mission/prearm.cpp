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

#include "fieldrover/mission/prearm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fieldrover::mission {

namespace {

std::string fmt_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

bool PreArmReport::armable() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> PreArmReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

PreArmReport run_prearm(const HealthInputs& h, const PrearmThresholds& th) {
  PreArmReport r;
  auto add = [&r](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  add("accel_calibrated", h.accel_calibrated, h.accel_calibrated ? "" : "accelerometer not calibrated");
  add("gyro_calibrated", h.gyro_calibrated, h.gyro_calibrated ? "" : "gyroscope not calibrated");
  add("compass_calibrated", h.compass_calibrated, h.compass_calibrated ? "" : "compass not calibrated");
  add("ahrs_ok", std::isfinite(h.ahrs_error_deg) && h.ahrs_error_deg <= th.max_ahrs_error_deg,
      "ahrs error " + fmt_value(h.ahrs_error_deg) + " deg");
  add("gps_status", h.gps_fix != sensors::FixType::None,
      "fix " + std::string(sensors::to_string(h.gps_fix)));
  add("rc_signal_ok", h.rc_signal_ok, h.rc_signal_ok ? "" : "no RC signal");
  add("throttle_neutral", std::abs(h.throttle_input) <= th.throttle_deadband,
      "throttle " + fmt_value(h.throttle_input));
  add("failsafe_configured", h.failsafe_configured, h.failsafe_configured ? "" : "failsafe not set");
  add("battery_v_ok", h.battery_v >= th.min_battery_v(),
      "battery " + fmt_value(h.battery_v) + " V, minimum " + fmt_value(th.min_battery_v()) + " V");
  add("ekf_health_ok", std::isfinite(h.ekf_variance) && h.ekf_variance <= th.max_ekf_variance,
      "ekf variance " + fmt_value(h.ekf_variance));
  add("vibration_ok", std::isfinite(h.vibration) && h.vibration <= th.max_vibration,
      "vibration " + fmt_value(h.vibration) + " m/s^2");
  add("internal_hw_ok", h.internal_hw_ok, h.internal_hw_ok ? "" : "internal hardware error");
  add("logging_ok", h.logging_ok, h.logging_ok ? "" : "logging unavailable");
  add("tuning_ok", h.tuning_ok, h.tuning_ok ? "" : "controller tuning invalid");
  return r;
}

}  // namespace fieldrover::mission
