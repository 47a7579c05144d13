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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fieldrover/yieldkit/box.hpp"

namespace fieldrover::yieldkit {

/// An image and its ground truth. An empty box list marks a negative sample.
struct AnnotatedImage {
  std::string image_id;
  int width_px = 0;
  int height_px = 0;
  std::vector<BoundingBox> ground_truth;
  std::optional<std::filesystem::path> pixels;  // PNG on disk, if any

  bool negative() const { return ground_truth.empty(); }
};

// Label text: one box per line, "class cx cy w h" with normalized values;
// prediction files append a confidence column. The single class is written
// as 0 and read as 0 or "pistachio". Blank lines and '#' comments are skipped.
// Errors are ParseError carrying "<source>:<line>: ...".

std::vector<BoundingBox> parse_labels(std::string_view text, bool with_confidence,
                                      std::string_view source = "<labels>");
std::string format_labels(const std::vector<BoundingBox>& boxes);

std::vector<BoundingBox> read_label_file(const std::filesystem::path& path, bool with_confidence);
void write_label_file(const std::filesystem::path& path, const std::vector<BoundingBox>& boxes);

/// Reads every "<image_id>.txt" in `dir`, sorted by image id.
std::vector<std::pair<std::string, std::vector<BoundingBox>>> read_label_dir(
    const std::filesystem::path& dir, bool with_confidence);

// Dataset manifest:
//   {"images": [{"image_id", "width_px", "height_px", "labels", "image"?}]}
// where "labels" and "image" are paths relative to the manifest file.

std::vector<AnnotatedImage> load_dataset(const std::filesystem::path& manifest_path);

void check_image_id(std::string_view id);

}  // namespace fieldrover::yieldkit
