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

#include "fieldrover/yieldkit/split.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fieldrover/errors.hpp"
#include "fieldrover/random.hpp"

namespace fieldrover::yieldkit {

namespace {

constexpr std::size_t kSplits = 3;

std::array<double, kSplits> as_array(const SplitRatios& r) { return {r.train, r.val, r.test}; }

void check_ratios(const SplitRatios& r) {
  const auto a = as_array(r);
  for (double v : a) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidParameter("split ratios must be non-negative");
  }
  if (std::abs(a[0] + a[1] + a[2] - 1.0) > 1e-9) throw InvalidParameter("split ratios must sum to 1");
}

// Every way of handing `extra` leftover items of one stratum to distinct splits.
std::vector<std::array<int, kSplits>> extra_options(std::size_t extra) {
  std::vector<std::array<int, kSplits>> out;
  for (int mask = 0; mask < (1 << kSplits); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != extra) continue;
    out.push_back({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1});
  }
  return out;
}

}  // namespace

std::size_t StrataBins::bin_of(std::size_t count) const {
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (count <= static_cast<std::size_t>(upper[i])) return i;
  }
  return upper.size();
}

std::array<std::size_t, 3> split_sizes(std::size_t n, const SplitRatios& ratios) {
  check_ratios(ratios);
  const auto r = as_array(ratios);
  std::array<std::size_t, kSplits> sizes{};
  std::array<double, kSplits> frac{};
  std::size_t used = 0;
  for (std::size_t k = 0; k < kSplits; ++k) {
    const double exact = static_cast<double>(n) * r[k];
    sizes[k] = static_cast<std::size_t>(std::floor(exact + 1e-9));
    frac[k] = exact - static_cast<double>(sizes[k]);
    used += sizes[k];
  }
  std::array<std::size_t, kSplits> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return frac[a] > frac[b] + 1e-12; });
  for (std::size_t i = 0; used < n; ++i, ++used) ++sizes[order[i % kSplits]];
  return sizes;
}

SplitResult stratified_split(const std::vector<std::size_t>& gt_counts, const SplitRatios& ratios,
                             std::uint64_t seed, const StrataBins& bins) {
  check_ratios(ratios);
  const std::size_t n = gt_counts.size();
  if (n < 10) throw InvalidParameter("stratified split needs at least 10 images");
  const auto r = as_array(ratios);
  const auto target = split_sizes(n, ratios);

  std::vector<std::vector<std::size_t>> strata(bins.size());
  for (std::size_t i = 0; i < n; ++i) strata[bins.bin_of(gt_counts[i])].push_back(i);

  SplitResult result;
  const std::size_t nonzero_splits = static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](double v) { return v > 0.0; }));
  for (const auto& s : strata) {
    if (!s.empty() && s.size() < nonzero_splits) result.stratified = false;
  }
  if (!result.stratified) {
    strata.assign(1, {});
    strata[0].resize(n);
    std::iota(strata[0].begin(), strata[0].end(), std::size_t{0});
  }
  strata.erase(std::remove_if(strata.begin(), strata.end(), [](const auto& s) { return s.empty(); }), strata.end());

  // Floor shares per stratum, then choose how leftovers go so the global
  // totals come out exactly (or as close as any assignment allows).
  const std::size_t m = strata.size();
  if (m > 12) throw InvalidParameter("at most 12 non-empty strata are supported");
  std::vector<std::array<std::size_t, kSplits>> base(m);
  std::vector<std::array<double, kSplits>> frac(m);
  std::vector<std::vector<std::array<int, kSplits>>> options(m);
  for (std::size_t s = 0; s < m; ++s) {
    std::size_t used = 0;
    for (std::size_t k = 0; k < kSplits; ++k) {
      const double exact = static_cast<double>(strata[s].size()) * r[k];
      base[s][k] = static_cast<std::size_t>(std::floor(exact + 1e-9));
      frac[s][k] = r[k] > 0.0 ? exact - static_cast<double>(base[s][k]) : -1.0;
      used += base[s][k];
    }
    options[s] = extra_options(strata[s].size() - used);
  }

  std::vector<std::size_t> pick(m, 0), best_pick(m, 0);
  double best_dev = std::numeric_limits<double>::infinity();
  double best_frac = -std::numeric_limits<double>::infinity();
  while (true) {
    std::array<long long, kSplits> total{};
    double frac_sum = 0.0;
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t k = 0; k < kSplits; ++k) {
        const int e = options[s][pick[s]][k];
        total[k] += static_cast<long long>(base[s][k]) + e;
        if (e) frac_sum += frac[s][k];
      }
    }
    double dev = 0.0;
    for (std::size_t k = 0; k < kSplits; ++k) dev += std::abs(total[k] - static_cast<long long>(target[k]));
    if (dev < best_dev || (dev == best_dev && frac_sum > best_frac + 1e-12)) {
      best_dev = dev;
      best_frac = frac_sum;
      best_pick = pick;
    }
    std::size_t s = 0;
    while (s < m && ++pick[s] == options[s].size()) pick[s++] = 0;
    if (s == m) break;
  }

  Rng rng(seed);
  std::array<std::vector<std::size_t>*, kSplits> dest{&result.train, &result.val, &result.test};
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<std::size_t> members = strata[s];
    std::shuffle(members.begin(), members.end(), rng);
    std::size_t cursor = 0;
    for (std::size_t k = 0; k < kSplits; ++k) {
      const std::size_t take = base[s][k] + static_cast<std::size_t>(options[s][best_pick[s]][k]);
      dest[k]->insert(dest[k]->end(), members.begin() + cursor, members.begin() + cursor + take);
      cursor += take;
    }
  }
  for (auto* d : dest) std::sort(d->begin(), d->end());
  return result;
}

SplitResult stratified_split(const std::vector<AnnotatedImage>& images, const SplitRatios& ratios,
                             std::uint64_t seed, const StrataBins& bins) {
  std::vector<std::size_t> counts;
  counts.reserve(images.size());
  for (const auto& img : images) counts.push_back(img.ground_truth.size());
  return stratified_split(counts, ratios, seed, bins);
}

}  // namespace fieldrover::yieldkit
