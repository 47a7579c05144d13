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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fieldrover/yieldkit/dataset.hpp"

namespace fieldrover::yieldkit {

struct SplitRatios {
  double train = 0.8;
  double val = 0.1;
  double test = 0.1;
};

/// Ground-truth count bins used as strata: upper bounds, inclusive. The
/// default gives {0}, 1-20, 21-50, >50.
struct StrataBins {
  std::vector<int> upper = {0, 20, 50};

  std::size_t bin_of(std::size_t count) const;
  std::size_t size() const { return upper.size() + 1; }
};

struct SplitResult {
  // Indices into the input, ascending.
  std::vector<std::size_t> train;
  std::vector<std::size_t> val;
  std::vector<std::size_t> test;
  /// False when some non-empty stratum was too small to reach every split
  /// and the partition fell back to a plain ratio split.
  bool stratified = true;
};

/// Split sizes for n items: largest-remainder rounding of n * ratio, ties to
/// the earlier split.
std::array<std::size_t, 3> split_sizes(std::size_t n, const SplitRatios& ratios);

/// Image-level stratified split. Global sizes follow split_sizes exactly and
/// every stratum lands within one image of its own exact share. Seeded and
/// deterministic. Throws InvalidParameter for fewer than 10 images or ratios
/// that are negative or do not sum to 1.
SplitResult stratified_split(const std::vector<AnnotatedImage>& images, const SplitRatios& ratios,
                             std::uint64_t seed, const StrataBins& bins = {});

/// Same, from per-image ground-truth counts.
SplitResult stratified_split(const std::vector<std::size_t>& gt_counts, const SplitRatios& ratios,
                             std::uint64_t seed, const StrataBins& bins = {});

}  // namespace fieldrover::yieldkit
