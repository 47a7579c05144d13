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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "fieldrover/app/config.hpp"
#include "fieldrover/yieldkit/split.hpp"
#include "fieldrover/yieldkit/tiling.hpp"

namespace fieldrover::app {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2 };

/// Pre-arm, arm, fly the mission headless and write telemetry.ndjson,
/// geotags.csv, geotags.geojson and summary.json under settings.out.
/// kExitOk only when the mission completes.
int cmd_run(const RunSettings& settings, std::ostream& out, std::ostream& err,
            const std::atomic<bool>* interrupt = nullptr);

/// Live service: the world (and mission, if given) is loaded, then the rover
/// waits for commands on the telemetry port until interrupted or
/// max_time_s elapses.
int cmd_serve(const RunSettings& settings, std::ostream& out, std::ostream& err,
              const std::atomic<bool>* interrupt = nullptr);

struct EvalSettings {
  std::filesystem::path gt_dir;
  std::filesystem::path pred_dir;
  std::optional<std::filesystem::path> out;      // directory for eval_report.json
  std::optional<std::filesystem::path> geotags;  // geotag CSV for a yield map
  yieldkit::EvalConfig eval;
};

/// Evaluates "<id>.txt" predictions against ground truth. A missing
/// prediction file counts as no detections; prediction files that share no
/// id with the ground truth are a domain failure.
int cmd_eval(const EvalSettings& settings, std::ostream& out, std::ostream& err);

struct PrepSettings {
  std::filesystem::path manifest;
  std::filesystem::path out;
  bool tile = false;
  bool negatives = false;
  bool augment = false;
  bool split = false;
  yieldkit::TileGrid grid;
  int augment_copies = 2;
  yieldkit::SplitRatios ratios;
  std::uint64_t seed = 0;
};

/// Dataset preparation in the fixed order tile, negatives, augment, split.
int cmd_prep(const PrepSettings& settings, std::ostream& out, std::ostream& err);

/// Recomputes the mission summary from a telemetry log; writes
/// summary.json when `out_dir` is given, otherwise prints it.
int cmd_replay(const std::filesystem::path& log, const std::optional<std::filesystem::path>& out_dir,
               std::ostream& out, std::ostream& err);

}  // namespace fieldrover::app
