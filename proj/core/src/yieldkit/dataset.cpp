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

#include "fieldrover/yieldkit/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fieldrover/errors.hpp"
#include "json_util.hpp"
#include "text_util.hpp"

namespace fieldrover::yieldkit {

namespace fs = std::filesystem;

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

void check_image_id(std::string_view id) {
  const bool ok = !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '-' || c == '.';
  });
  if (!ok || id == "." || id == "..") throw ParseError("invalid image id '" + std::string(id) + "'");
}

std::vector<BoundingBox> parse_labels(std::string_view text, bool with_confidence, std::string_view source) {
  std::vector<BoundingBox> boxes;
  std::size_t line_no = 0;
  for (std::string_view raw : detail::split(text, '\n')) {
    ++line_no;
    const std::string_view line = detail::trim_cr(raw);
    const auto fields = detail::split_ws(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return ParseError(std::string(source) + ":" + std::to_string(line_no) + ": " + why);
    };
    const std::size_t want = with_confidence ? 6 : 5;
    if (fields.size() != want) {
      throw fail("expected " + std::to_string(want) + " fields, got " + std::to_string(fields.size()));
    }
    if (fields[0] != "0" && fields[0] != "pistachio") throw fail("unknown class '" + std::string(fields[0]) + "'");
    double v[5] = {};
    for (std::size_t i = 1; i < want; ++i) {
      const auto d = detail::parse_double(fields[i]);
      if (!d) throw fail("not a number: '" + std::string(fields[i]) + "'");
      v[i - 1] = *d;
    }
    BoundingBox b{v[0], v[1], v[2], v[3], std::nullopt};
    if (with_confidence) b.confidence = v[4];
    try {
      validate(b);
    } catch (const InvalidParameter& e) {
      throw fail(e.what());
    }
    boxes.push_back(b);
  }
  return boxes;
}

std::string format_labels(const std::vector<BoundingBox>& boxes) {
  std::string out;
  for (const auto& b : boxes) {
    out += "0 " + detail::format_double(b.cx) + ' ' + detail::format_double(b.cy) + ' ' +
           detail::format_double(b.w) + ' ' + detail::format_double(b.h);
    if (b.confidence) out += ' ' + detail::format_double(*b.confidence);
    out += '\n';
  }
  return out;
}

std::vector<BoundingBox> read_label_file(const fs::path& path, bool with_confidence) {
  return parse_labels(read_text(path), with_confidence, path.string());
}

void write_label_file(const fs::path& path, const std::vector<BoundingBox>& boxes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << format_labels(boxes);
}

std::vector<std::pair<std::string, std::vector<BoundingBox>>> read_label_dir(const fs::path& dir,
                                                                             bool with_confidence) {
  if (!fs::is_directory(dir)) throw ParseError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, std::vector<BoundingBox>>> out;
  out.reserve(files.size());
  for (const auto& f : files) out.emplace_back(f.stem().string(), read_label_file(f, with_confidence));
  return out;
}

std::vector<AnnotatedImage> load_dataset(const fs::path& manifest_path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text(manifest_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(manifest_path.string() + ": " + e.what());
  }
  const fs::path base = manifest_path.parent_path();
  detail::require_object(doc, "manifest");
  if (!doc.contains("images") || !doc.at("images").is_array()) throw ParseError("manifest.images must be an array");
  std::vector<AnnotatedImage> images;
  for (const auto& entry : doc.at("images")) {
    detail::require_object(entry, "manifest image");
    AnnotatedImage img;
    img.image_id = detail::get_string(entry, "image_id", "manifest image");
    check_image_id(img.image_id);
    const double w = detail::get_number(entry, "width_px", "manifest image");
    const double h = detail::get_number(entry, "height_px", "manifest image");
    if (w < 1 || h < 1 || w != static_cast<int>(w) || h != static_cast<int>(h)) {
      throw ParseError("image " + img.image_id + ": dimensions must be positive integers");
    }
    img.width_px = static_cast<int>(w);
    img.height_px = static_cast<int>(h);
    const auto labels = entry.value("labels", img.image_id + ".txt");
    const fs::path label_path = base / labels;
    if (fs::exists(label_path)) img.ground_truth = read_label_file(label_path, false);
    if (entry.contains("image") && entry.at("image").is_string()) {
      img.pixels = base / entry.at("image").get<std::string>();
    }
    images.push_back(std::move(img));
  }
  return images;
}

}  // namespace fieldrover::yieldkit
