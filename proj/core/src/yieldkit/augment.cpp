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

#include "fieldrover/yieldkit/augment.hpp"

#include <cmath>
#include <random>
#include <unordered_set>

#include <opencv2/imgproc.hpp>

#include "fieldrover/errors.hpp"
#include "fieldrover/random.hpp"

namespace fieldrover::yieldkit {

namespace {

void check_range(double v, double lo, double hi, const char* name) {
  if (!(v >= lo && v <= hi)) {
    throw InvalidParameter(std::string(name) + " must lie in [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
  }
}

void adjust_hsv(Image& img, const AugmentParams& p) {
  cv::Mat rgb(img.height, img.width, CV_8UC3, img.rgb.data());
  cv::Mat f;
  rgb.convertTo(f, CV_32FC3, 1.0 / 255.0);
  cv::Mat hsv;
  cv::cvtColor(f, hsv, cv::COLOR_RGB2HSV);  // H in [0, 360), S and V in [0, 1]
  const double gain = 1.0 + p.brightness_pct / 100.0;
  const double gamma = 1.0 / (1.0 + p.exposure_pct / 100.0);
  for (int y = 0; y < hsv.rows; ++y) {
    auto* row = hsv.ptr<cv::Vec3f>(y);
    for (int x = 0; x < hsv.cols; ++x) {
      cv::Vec3f& px = row[x];
      if (p.hue_deg != 0.0) {
        double h = std::fmod(px[0] + p.hue_deg, 360.0);
        if (h < 0.0) h += 360.0;
        px[0] = static_cast<float>(h);
      }
      double v = px[2];
      if (p.brightness_pct != 0.0) v = std::min(1.0, v * gain);
      if (p.exposure_pct != 0.0) v = std::pow(v, gamma);
      px[2] = static_cast<float>(v);
    }
  }
  cv::cvtColor(hsv, f, cv::COLOR_HSV2RGB);
  f.convertTo(rgb, CV_8UC3, 255.0);
}

void blur(Image& img, double sigma) {
  cv::Mat rgb(img.height, img.width, CV_8UC3, img.rgb.data());
  cv::Mat out;
  cv::GaussianBlur(rgb, out, cv::Size(0, 0), sigma, sigma, cv::BORDER_REFLECT_101);
  out.copyTo(rgb);
}

void add_noise(Image& img, double frac, std::uint64_t seed) {
  const std::size_t n = img.pixel_count();
  const auto k = static_cast<std::size_t>(std::llround(frac * static_cast<double>(n)));
  if (k == 0) return;
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> value(0, 255);
  std::unordered_set<std::size_t> used;
  while (used.size() < k) {
    const std::size_t i = pick(rng);
    if (!used.insert(i).second) continue;
    std::uint8_t* px = img.rgb.data() + i * 3;
    std::uint8_t r, g, b;
    do {
      r = static_cast<std::uint8_t>(value(rng));
      g = static_cast<std::uint8_t>(value(rng));
      b = static_cast<std::uint8_t>(value(rng));
    } while (r == px[0] && g == px[1] && b == px[2]);
    px[0] = r;
    px[1] = g;
    px[2] = b;
  }
}

}  // namespace

void AugmentParams::validate() const {
  check_range(hue_deg, -15.0, 15.0, "hue_deg");
  check_range(brightness_pct, -15.0, 15.0, "brightness_pct");
  check_range(exposure_pct, -10.0, 10.0, "exposure_pct");
  check_range(blur_px, 0.0, 2.5, "blur_px");
  check_range(noise_frac, 0.0, 0.001, "noise_frac");
}

bool AugmentParams::identity() const {
  return hue_deg == 0.0 && brightness_pct == 0.0 && exposure_pct == 0.0 && blur_px == 0.0 && noise_frac == 0.0;
}

AugmentParams random_params(std::uint64_t seed) {
  Rng rng(seed);
  auto u = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  AugmentParams p;
  p.hue_deg = u(-15.0, 15.0);
  p.brightness_pct = u(-15.0, 15.0);
  p.exposure_pct = u(-10.0, 10.0);
  p.blur_px = u(0.0, 2.5);
  p.noise_frac = u(0.0, 0.001);
  return p;
}

Image augment(const Image& image, const AugmentParams& params, std::uint64_t seed) {
  params.validate();
  if (image.rgb.size() != image.pixel_count() * 3) throw InvalidParameter("image buffer size mismatch");
  Image out = image;
  if (out.pixel_count() == 0) return out;
  if (params.hue_deg != 0.0 || params.brightness_pct != 0.0 || params.exposure_pct != 0.0) adjust_hsv(out, params);
  if (params.blur_px > 0.0) blur(out, params.blur_px);
  if (params.noise_frac > 0.0) add_noise(out, params.noise_frac, seed);
  return out;
}

nlohmann::json params_to_json(const AugmentParams& p) {
  return {{"hue_deg", p.hue_deg},
          {"brightness_pct", p.brightness_pct},
          {"exposure_pct", p.exposure_pct},
          {"blur_px", p.blur_px},
          {"noise_frac", p.noise_frac}};
}

}  // namespace fieldrover::yieldkit
