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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "fieldrover/errors.hpp"
#include "fieldrover/yieldkit/augment.hpp"
#include "fieldrover/yieldkit/dataset.hpp"
#include "fieldrover/yieldkit/image.hpp"
#include "fieldrover/yieldkit/split.hpp"
#include "test_util.hpp"

namespace fr = fieldrover;
namespace fy = fieldrover::yieldkit;

namespace {

fy::Image gradient(int w, int h) {
  fy::Image img(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      auto* p = img.at(x, y);
      p[0] = static_cast<std::uint8_t>((x * 7 + y) % 256);
      p[1] = static_cast<std::uint8_t>((y * 5) % 256);
      p[2] = static_cast<std::uint8_t>((x * y) % 256);
    }
  return img;
}

// Hue in degrees from 8-bit RGB, computed from the textbook hexcone formula.
double hue_of(const std::uint8_t* p) {
  const double r = p[0], g = p[1], b = p[2];
  const double mx = std::max({r, g, b}), mn = std::min({r, g, b});
  if (mx == mn) return 0.0;
  double h;
  if (mx == r) h = 60 * (g - b) / (mx - mn);
  else if (mx == g) h = 60 * (2 + (b - r) / (mx - mn));
  else h = 60 * (4 + (r - g) / (mx - mn));
  return h < 0 ? h + 360 : h;
}

}  // namespace

TEST(Labels, ParseFormatRoundTrip) {
  const std::string text = "# comment\n0 0.5 0.5 0.2 0.1\n\npistachio 0.25 0.75 0.1 0.1\n";
  const auto boxes = fy::parse_labels(text, false);
  ASSERT_EQ(boxes.size(), 2u);
  EXPECT_EQ(fy::parse_labels(fy::format_labels(boxes), false), boxes);
  const auto pred = fy::parse_labels("0 0.5 0.5 0.2 0.1 0.87\n", true);
  EXPECT_EQ(pred[0].confidence, 0.87);
  EXPECT_EQ(fy::parse_labels(fy::format_labels(pred), true), pred);
}

TEST(Labels, ErrorsCarryLocation) {
  try {
    fy::parse_labels("0 0.5 0.5 0.2 0.1\n1 0.5 0.5 0.2 0.1\n", false, "a.txt");
    FAIL();
  } catch (const fr::ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("a.txt:2:", 0), 0u) << e.what();
  }
  EXPECT_THROW(fy::parse_labels("0 0.5 0.5 0.2\n", false), fr::ParseError);
  EXPECT_THROW(fy::parse_labels("0 0.5 0.5 0.2 0.1\n", true), fr::ParseError);
  EXPECT_THROW(fy::parse_labels("0 0.5 0.5 0 0.1\n", false), fr::ParseError);
  EXPECT_THROW(fy::parse_labels("0 0.5 0.5 x 0.1\n", false), fr::ParseError);
}

TEST(Dataset, ManifestLoadsLabelsAndNegatives) {
  testutil::TempDir dir("dataset");
  testutil::spit(dir / "labels/a.txt", "0 0.5 0.5 0.2 0.2\n0 0.1 0.1 0.1 0.1\n");
  testutil::spit(dir / "manifest.json", R"({"images": [
    {"image_id": "a", "width_px": 640, "height_px": 480, "labels": "labels/a.txt"},
    {"image_id": "b", "width_px": 640, "height_px": 480, "labels": "labels/b.txt"}]})");
  const auto ds = fy::load_dataset(dir / "manifest.json");
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[0].ground_truth.size(), 2u);
  EXPECT_TRUE(ds[1].negative());
  EXPECT_THROW(fy::check_image_id("../etc"), fr::ParseError);
  EXPECT_THROW(fy::load_dataset(dir / "nope.json"), fr::ParseError);

  testutil::spit(dir / "d/x.txt", "0 0.5 0.5 0.2 0.2\n");
  testutil::spit(dir / "d/a.txt", "");
  const auto listed = fy::read_label_dir(dir / "d", false);
  ASSERT_EQ(listed.size(), 2u);
  EXPECT_EQ(listed[0].first, "a");
  EXPECT_EQ(listed[1].first, "x");
}

TEST(Image, PngRoundTripAndCrop) {
  testutil::TempDir dir("png");
  const auto img = gradient(37, 23);
  fy::write_png(dir / "g.png", img);
  EXPECT_EQ(fy::read_png(dir / "g.png"), img);
  const auto c = fy::crop(img, {5, 3, 10, 4});
  EXPECT_EQ(c.width, 10);
  EXPECT_EQ(c.height, 4);
  EXPECT_EQ(c.at(0, 0)[0], img.at(5, 3)[0]);
  EXPECT_THROW(fy::crop(img, {30, 0, 10, 4}), fr::InvalidParameter);
  EXPECT_THROW(fy::read_png(dir / "missing.png"), fr::Error);
}

TEST(Augment, ZeroParamsAreIdentity) {
  const auto img = gradient(64, 48);
  const fy::AugmentParams zero;
  EXPECT_TRUE(zero.identity());
  EXPECT_EQ(fy::augment(img, zero, 5), img);
}

TEST(Augment, HueRotationOnPureRed) {
  fy::Image img(4, 4);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) img.at(x, y)[0] = 255;
  fy::AugmentParams p;
  p.hue_deg = 15;
  const auto out = fy::augment(img, p, 1);
  const auto* px = out.at(2, 2);
  EXPECT_NEAR(hue_of(px), 15.0, 0.5);
  EXPECT_EQ(px[0], 255);  // value unchanged
  EXPECT_EQ(px[2], 0);    // saturation unchanged
}

TEST(Augment, BrightnessAndExposureScaleValue) {
  fy::Image img(2, 2);
  for (auto& b : img.rgb) b = 100;
  fy::AugmentParams p;
  p.brightness_pct = 10;
  EXPECT_EQ(fy::augment(img, p, 1).at(0, 0)[1], 110);
  p = {};
  p.exposure_pct = 10;  // v^(1/1.1) on a 0..1 scale
  const int want = static_cast<int>(std::lround(255 * std::pow(100 / 255.0, 1 / 1.1)));
  EXPECT_NEAR(fy::augment(img, p, 1).at(0, 0)[1], want, 1);
}

TEST(Augment, NoiseChangesExactPixelCount) {
  fy::Image img(1000, 1000);
  fy::AugmentParams p;
  p.noise_frac = 0.001;
  const auto out = fy::augment(img, p, 99);
  EXPECT_EQ(fy::count_changed_pixels(img, out), 1000u);
  EXPECT_EQ(fy::augment(img, p, 99), out);
  p.noise_frac = 0.0005;
  EXPECT_EQ(fy::count_changed_pixels(img, fy::augment(img, p, 3)), 500u);
}

TEST(Augment, BlurSmoothsAndParamsValidate) {
  auto img = gradient(32, 32);
  fy::AugmentParams p;
  p.blur_px = 2.0;
  const auto out = fy::augment(img, p, 1);
  EXPECT_EQ(out.width, 32);
  EXPECT_GT(fy::count_changed_pixels(img, out), 0u);
  p.blur_px = 2.6;
  EXPECT_THROW(p.validate(), fr::InvalidParameter);
  p = {};
  p.hue_deg = -16;
  EXPECT_THROW(fy::augment(img, p, 1), fr::InvalidParameter);
  for (std::uint64_t s = 0; s < 50; ++s) EXPECT_NO_THROW(fy::random_params(s).validate());
}

TEST(Split, FieldDatasetSizes) {
  EXPECT_EQ(fy::split_sizes(1090, {}), (std::array<std::size_t, 3>{872, 109, 109}));
  EXPECT_EQ(fy::split_sizes(10, {}), (std::array<std::size_t, 3>{8, 1, 1}));
  EXPECT_EQ(fy::split_sizes(11, {}), (std::array<std::size_t, 3>{9, 1, 1}));
  std::vector<std::size_t> counts(1090);
  std::mt19937_64 rng(5);
  for (auto& c : counts) c = std::uniform_int_distribution<std::size_t>(0, 90)(rng);
  const auto s = fy::stratified_split(counts, {}, 1);
  EXPECT_EQ(s.train.size(), 872u);
  EXPECT_EQ(s.val.size(), 109u);
  EXPECT_EQ(s.test.size(), 109u);
  EXPECT_TRUE(s.stratified);
}

TEST(Split, StrataWithinOneImageOverSeeds) {
  std::mt19937_64 rng(8);
  std::vector<std::size_t> counts(203);
  for (auto& c : counts) c = std::uniform_int_distribution<std::size_t>(0, 70)(rng);
  const fy::StrataBins bins;
  std::map<std::size_t, std::size_t> stratum_size;
  for (auto c : counts) ++stratum_size[bins.bin_of(c)];
  const double ratios[3] = {0.8, 0.1, 0.1};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = fy::stratified_split(counts, {}, seed);
    ASSERT_TRUE(s.stratified);
    std::set<std::size_t> all;
    const std::vector<std::size_t>* parts[3] = {&s.train, &s.val, &s.test};
    for (int k = 0; k < 3; ++k) {
      EXPECT_TRUE(std::is_sorted(parts[k]->begin(), parts[k]->end()));
      std::map<std::size_t, std::size_t> per;
      for (auto i : *parts[k]) {
        EXPECT_TRUE(all.insert(i).second) << "index in two splits";
        ++per[bins.bin_of(counts[i])];
      }
      for (const auto& [bin, n] : stratum_size)
        EXPECT_LE(std::abs(static_cast<double>(per[bin]) - ratios[k] * n), 1.0) << "seed " << seed;
    }
    EXPECT_EQ(all.size(), counts.size());
  }
}

TEST(Split, DeterministicAndDegrades) {
  std::vector<std::size_t> counts(40, 3);
  const auto a = fy::stratified_split(counts, {}, 17);
  const auto b = fy::stratified_split(counts, {}, 17);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test, b.test);
  EXPECT_NE(a.train, fy::stratified_split(counts, {}, 18).train);
  counts[0] = 99;  // one-image stratum cannot reach three splits
  EXPECT_FALSE(fy::stratified_split(counts, {}, 17).stratified);
  EXPECT_THROW(fy::stratified_split(std::vector<std::size_t>(9, 1), {}, 1), fr::InvalidParameter);
  EXPECT_THROW(fy::stratified_split(counts, {0.5, 0.2, 0.2}, 1), fr::InvalidParameter);
  EXPECT_THROW(fy::stratified_split(counts, {1.2, -0.1, -0.1}, 1), fr::InvalidParameter);
}
