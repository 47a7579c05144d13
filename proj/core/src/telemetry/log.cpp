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

#include "fieldrover/telemetry/log.hpp"

#include "fieldrover/errors.hpp"

namespace fieldrover::telemetry {

using nlohmann::json;

TelemetryRecorder::TelemetryRecorder(const std::filesystem::path& path) {
  out_.open(path, std::ios::out | std::ios::app | std::ios::binary);
  if (!out_) throw Error("cannot open telemetry log " + path.string() + " for writing");
}

void TelemetryRecorder::write(const TelemetryFrame& frame) {
  out_ << frame_to_json(frame).dump() << '\n';
  ++lines_;
}

std::vector<TelemetryFrame> read_log(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open telemetry log " + path.string());
  std::vector<TelemetryFrame> frames;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      frames.push_back(frame_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return frames;
}

void SummaryAccumulator::add(const TelemetryFrame& f) {
  auto& s = summary_;
  ++s.frames;
  s.final_state = std::string(mission::to_string(f.mode));
  s.distance_traveled_m = f.odometer_m;
  s.min_clearance_m = f.min_clearance_m;
  s.collisions = f.collisions;
  for (const auto& e : f.events) {
    switch (e.kind) {
      case mission::EventKind::WaypointReached:
        ++s.waypoints_hit;
        break;
      case mission::EventKind::Capture:
        ++s.captures;
        break;
      case mission::EventKind::StateChanged:
        if (e.detail.rfind("MISSION_RUNNING->MISSION_COMPLETE", 0) == 0) s.completion_time_s = e.t;
        break;
      default:
        break;
    }
  }
}

MissionSummary summarize(const std::vector<TelemetryFrame>& frames) {
  SummaryAccumulator acc;
  for (const auto& f : frames) acc.add(f);
  return acc.summary();
}

json summary_to_json(const MissionSummary& s) {
  return {{"final_state", s.final_state},
          {"mission_complete", s.completion_time_s.has_value()},
          {"waypoints_hit", s.waypoints_hit},
          {"captures", s.captures},
          {"collisions", s.collisions},
          {"distance_traveled_m", s.distance_traveled_m},
          {"min_clearance_m", s.min_clearance_m ? json(*s.min_clearance_m) : json(nullptr)},
          {"completion_time_s", s.completion_time_s ? json(*s.completion_time_s) : json(nullptr)},
          {"frames", s.frames}};
}

}  // namespace fieldrover::telemetry
