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

#include <string>
#include <vector>

#include "fieldrover/sensors/gps.hpp"

namespace fieldrover::mission {

/// Injected health scalars standing in for the autopilot's sensor checks.
struct HealthInputs {
  bool accel_calibrated = true;
  bool gyro_calibrated = true;
  bool compass_calibrated = true;
  double ahrs_error_deg = 0.5;  // attitude/heading estimator disagreement
  sensors::FixType gps_fix = sensors::FixType::Gps3d;
  bool rc_signal_ok = true;
  double throttle_input = 0.0;  // RC stick, [-1, 1]
  bool failsafe_configured = true;
  double battery_v = 30.8;
  double ekf_variance = 0.1;
  double vibration = 5.0;  // m/s^2
  bool internal_hw_ok = true;
  bool logging_ok = true;
  bool tuning_ok = true;
};

struct PrearmThresholds {
  int battery_cells = 8;
  double min_cell_v = 3.5;
  double max_ahrs_error_deg = 5.0;
  double throttle_deadband = 0.05;
  double max_ekf_variance = 0.8;
  double max_vibration = 30.0;

  double min_battery_v() const { return battery_cells * min_cell_v; }
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PreArmReport {
  std::vector<CheckResult> checks;

  bool armable() const;
  std::vector<std::string> failures() const;
};

/// Evaluates every check; never stops at the first failure.
PreArmReport run_prearm(const HealthInputs& health, const PrearmThresholds& thresholds = {});

}  // namespace fieldrover::mission
