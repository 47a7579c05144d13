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

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fieldrover/telemetry/frame.hpp"

namespace fieldrover::telemetry {

/// Append-only JSON-lines frame log. Opening fails with Error when the path
/// cannot be written.
class TelemetryRecorder {
 public:
  explicit TelemetryRecorder(const std::filesystem::path& path);

  void write(const TelemetryFrame& frame);
  void flush() { out_.flush(); }
  std::size_t lines_written() const { return lines_; }

 private:
  std::ofstream out_;
  std::size_t lines_ = 0;
};

std::vector<TelemetryFrame> read_log(const std::filesystem::path& path);

struct MissionSummary {
  std::string final_state = "DISARMED";
  int waypoints_hit = 0;
  int captures = 0;
  int collisions = 0;
  double distance_traveled_m = 0.0;
  std::optional<double> min_clearance_m;
  std::optional<double> completion_time_s;
  std::size_t frames = 0;

  friend bool operator==(const MissionSummary&, const MissionSummary&) = default;
};

/// Derives the summary from the frame stream alone, so a live run and a
/// replay of its log agree exactly.
class SummaryAccumulator {
 public:
  void add(const TelemetryFrame& frame);
  const MissionSummary& summary() const { return summary_; }

 private:
  MissionSummary summary_;
};

MissionSummary summarize(const std::vector<TelemetryFrame>& frames);

nlohmann::json summary_to_json(const MissionSummary& s);

}  // namespace fieldrover::telemetry
