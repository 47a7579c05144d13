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

#include "fieldrover/app/service.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include "fieldrover/errors.hpp"
#include "fieldrover/telemetry/command.hpp"

namespace fieldrover::app {

using mission::MissionState;

SimulationService::SimulationService(mission::MissionExecutive& exec, ServiceOptions options)
    : exec_(exec), options_(options) {
  if (!(options_.frame_rate_hz > 0.0)) throw InvalidParameter("telemetry rate must be positive");
}

void SimulationService::pump_commands() {
  if (!server_) return;
  for (auto& in : server_->take_lines()) {
    std::optional<std::int64_t> last;
    if (auto it = last_seq_.find(in.client); it != last_seq_.end()) last = it->second;
    auto parsed = telemetry::parse_command_line(in.line, last);
    telemetry::Ack ack = parsed.nack;
    if (parsed.command) {
      last_seq_[in.client] = parsed.command->seq;
      ack = telemetry::apply_command(exec_, *parsed.command);
    }
    server_->send(in.client, telemetry::ack_to_json(ack).dump());
  }
}

void SimulationService::emit_frame() {
  const auto frame = telemetry::make_frame(exec_.snapshot(), exec_.drain_events(), exec_.map().origin_geo);
  summary_.add(frame);
  if (recorder_ || server_) {
    const std::string line = telemetry::frame_to_json(frame).dump();
    if (recorder_) recorder_->write(frame);
    if (server_) server_->broadcast(line);
  }
  if (sink_) sink_(frame);
}

bool SimulationService::settled() const {
  const MissionState s = exec_.state();
  if (s == MissionState::MissionComplete) return true;
  return was_running_ && (s == MissionState::Hold || s == MissionState::Disarmed);
}

telemetry::MissionSummary SimulationService::run(const std::atomic<bool>* interrupt) {
  const double dt = exec_.config().dt;
  const long ticks_per_frame = std::max(1L, std::lround(1.0 / (options_.frame_rate_hz * dt)));
  const auto wall_start = std::chrono::steady_clock::now();
  long tick = 0;
  bool frame_pending = false;

  while (true) {
    if (interrupt && interrupt->load()) break;
    pump_commands();
    if (exec_.time() + dt > options_.max_time_s + 1e-9) break;

    exec_.tick();
    ++tick;
    frame_pending = true;
    if (exec_.state() == MissionState::MissionRunning) was_running_ = true;

    if (rtk_server_) {
      const auto& c = exec_.latest_correction();
      if (c && (!last_correction_t_ || c->t != *last_correction_t_)) {
        rtk_server_->broadcast(sensors::correction_to_json(*c).dump());
        last_correction_t_ = c->t;
      }
    }
    if (tick % ticks_per_frame == 0) {
      emit_frame();
      frame_pending = false;
    }
    if (options_.stop_when_settled && settled()) break;
    if (options_.realtime) {
      std::this_thread::sleep_until(wall_start + std::chrono::duration<double>(tick * dt));
    }
  }
  if (frame_pending) emit_frame();
  if (recorder_) recorder_->flush();
  return summary_.summary();
}

}  // namespace fieldrover::app
