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
#include <vector>

#include <nlohmann/json.hpp>

#include "fieldrover/yieldkit/box.hpp"

namespace fieldrover::yieldkit {

/// Detection confusion counts. True negatives are not counted for object
/// detection, so tn is always zero.
struct ConfusionMatrix {
  std::int64_t tp = 0;
  std::int64_t fn = 0;
  std::int64_t fp = 0;

  static constexpr std::int64_t tn() { return 0; }

  ConfusionMatrix& operator+=(const ConfusionMatrix& o) {
    tp += o.tp;
    fn += o.fn;
    fp += o.fp;
    return *this;
  }
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

struct EvalConfig {
  double confidence_threshold = 0.25;
  double iou_threshold = 0.70;

  void validate() const;  // both thresholds in (0, 1)
};

/// IoU thresholds 0.50, 0.55, ..., 0.95.
std::vector<double> map_iou_grid();

struct Match {
  std::size_t pred = 0;  // index into the prediction list
  std::size_t gt = 0;
  double iou = 0.0;

  friend bool operator==(const Match&, const Match&) = default;
};

struct MatchResult {
  ConfusionMatrix confusion;
  std::vector<Match> matches;  // in matching order
  std::size_t surviving = 0;   // predictions at or above the confidence threshold
};

/// Drops predictions below the confidence threshold, visits the rest by
/// descending confidence (ties keep input order), and pairs each with the
/// unmatched ground-truth box of highest IoU at or above the IoU threshold
/// (ties to the lower gt index).
MatchResult match_detections(const std::vector<BoundingBox>& pred, const std::vector<BoundingBox>& gt,
                             const EvalConfig& cfg);

/// 100 * (tp + tn) / (tp + fn + fp + tn). Throws Undefined for an all-zero
/// matrix and InvalidParameter for negative counts.
double accuracy(const ConfusionMatrix& m);

struct ImageDetections {
  std::vector<BoundingBox> pred;
  std::vector<BoundingBox> gt;
};

/// All-point interpolated average precision over every prediction (no
/// confidence cut), ranked globally by confidence; ties go to earlier images
/// then earlier predictions. Throws Undefined when there is no ground truth.
double average_precision(const std::vector<ImageDetections>& images, double iou_threshold);

/// Mean AP over map_iou_grid().
double map_range(const std::vector<ImageDetections>& images);

struct ImageReport {
  std::string image_id;
  ConfusionMatrix confusion;
  std::size_t gt = 0;
  std::size_t predictions = 0;
};

struct EvalReport {
  ConfusionMatrix confusion;
  // Empty when the metric is undefined for the input.
  std::optional<double> accuracy_pct;
  std::optional<double> ap50;
  std::optional<double> map50_95;
  std::vector<ImageReport> per_image;
};

/// Full evaluation of named images; `ids` runs parallel to `images`.
EvalReport evaluate(const std::vector<std::string>& ids, const std::vector<ImageDetections>& images,
                    const EvalConfig& cfg);

nlohmann::json report_to_json(const EvalReport& report);

}  // namespace fieldrover::yieldkit
