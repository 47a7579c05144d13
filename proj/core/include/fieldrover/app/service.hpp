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

#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>

#include "fieldrover/mission/executive.hpp"
#include "fieldrover/telemetry/frame.hpp"
#include "fieldrover/telemetry/log.hpp"
#include "fieldrover/telemetry/server.hpp"

namespace fieldrover::app {

struct ServiceOptions {
  double frame_rate_hz = 10.0;
  double max_time_s = std::numeric_limits<double>::infinity();
  bool realtime = false;  // pace ticks against the wall clock
  /// Stop once the mission completes, or once a started mission drops back
  /// to HOLD or DISARMED.
  bool stop_when_settled = true;
};

/// Drives the executive tick by tick. Commands arriving on the server are
/// parsed and applied only between ticks; frames go to the recorder, the
/// server and an optional sink, all from the same frame object, so every
/// observer sees the same sequence.
class SimulationService {
 public:
  SimulationService(mission::MissionExecutive& exec, ServiceOptions options);

  void set_recorder(telemetry::TelemetryRecorder* recorder) { recorder_ = recorder; }
  void set_server(telemetry::LineServer* server) { server_ = server; }
  void set_rtk_server(telemetry::LineServer* server) { rtk_server_ = server; }
  void set_frame_sink(std::function<void(const telemetry::TelemetryFrame&)> sink) { sink_ = std::move(sink); }

  /// Runs until settled, max_time_s, or `interrupt` becomes true. Returns the
  /// summary derived from the emitted frames.
  telemetry::MissionSummary run(const std::atomic<bool>* interrupt = nullptr);

  std::size_t frames_emitted() const { return summary_.summary().frames; }

 private:
  void pump_commands();
  void emit_frame();
  bool settled() const;

  mission::MissionExecutive& exec_;
  ServiceOptions options_;
  telemetry::TelemetryRecorder* recorder_ = nullptr;
  telemetry::LineServer* server_ = nullptr;
  telemetry::LineServer* rtk_server_ = nullptr;
  std::function<void(const telemetry::TelemetryFrame&)> sink_;
  std::map<telemetry::LineServer::ClientId, std::int64_t> last_seq_;
  std::optional<double> last_correction_t_;
  telemetry::SummaryAccumulator summary_;
  bool was_running_ = false;
};

}  // namespace fieldrover::app
