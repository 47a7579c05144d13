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

#include "fieldrover/yieldkit/image.hpp"

#include <cstring>

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "fieldrover/errors.hpp"

namespace fieldrover::yieldkit {

Image read_png(const std::filesystem::path& path) {
  const cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (bgr.empty()) throw ParseError("cannot read image " + path.string());
  Image img(bgr.cols, bgr.rows);
  cv::Mat rgb(bgr.rows, bgr.cols, CV_8UC3, img.rgb.data());
  cv::cvtColor(bgr, rgb, cv::COLOR_BGR2RGB);
  return img;
}

void write_png(const std::filesystem::path& path, const Image& image) {
  const cv::Mat rgb(image.height, image.width, CV_8UC3, const_cast<std::uint8_t*>(image.rgb.data()));
  cv::Mat bgr;
  cv::cvtColor(rgb, bgr, cv::COLOR_RGB2BGR);
  if (!cv::imwrite(path.string(), bgr)) throw Error("cannot write image " + path.string());
}

Image crop(const Image& image, const PixelRect& r) {
  if (r.x < 0 || r.y < 0 || r.width <= 0 || r.height <= 0 || r.right() > image.width ||
      r.bottom() > image.height) {
    throw InvalidParameter("crop rectangle outside the image");
  }
  Image out(r.width, r.height);
  for (int y = 0; y < r.height; ++y) {
    std::memcpy(out.at(0, y), image.at(r.x, r.y + y), static_cast<std::size_t>(r.width) * 3);
  }
  return out;
}

std::size_t count_changed_pixels(const Image& a, const Image& b) {
  if (a.width != b.width || a.height != b.height) throw InvalidParameter("image sizes differ");
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.pixel_count(); ++i) {
    const std::size_t k = i * 3;
    if (a.rgb[k] != b.rgb[k] || a.rgb[k + 1] != b.rgb[k + 1] || a.rgb[k + 2] != b.rgb[k + 2]) ++n;
  }
  return n;
}

}  // namespace fieldrover::yieldkit
