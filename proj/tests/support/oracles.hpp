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

// Slow, obviously-correct reference implementations. They deliberately share
// no code with the library beyond plain data types.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "fieldrover/geometry.hpp"
#include "fieldrover/world/occupancy_grid.hpp"
#include "fieldrover/yieldkit/box.hpp"
#include "fieldrover/yieldkit/metrics.hpp"

namespace oracle {

// ---- grid shortest path ---------------------------------------------------

/// Cost a + b*sqrt(2) in whole cells.
struct Cost {
  std::int64_t a = 0;
  std::int64_t b = 0;
};

/// Exact sign of (x.a + x.b r2) - (y.a + y.b r2) via squaring.
inline int compare(Cost x, Cost y) {
  const std::int64_t p = x.a - y.a;  // rational part
  const std::int64_t q = y.b - x.b;  // compare p with q*sqrt(2)
  if (p == 0 && q == 0) return 0;
  if (p >= 0 && q <= 0) return 1;
  if (p <= 0 && q >= 0) return -1;
  const std::int64_t lhs = p * p;
  const std::int64_t rhs = 2 * q * q;
  if (p > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return lhs > rhs ? -1 : (lhs < rhs ? 1 : 0);
}

inline bool passable(const fieldrover::world::OccupancyGrid& g, int c, int r) {
  return c >= 0 && r >= 0 && c < g.cols() && r < g.rows() && !g.occupied({c, r});
}

/// Bellman-Ford style relaxation to a fixed point; returns the optimal cost
/// or nothing when the goal is unreachable.
inline std::optional<Cost> shortest_cost(const fieldrover::world::OccupancyGrid& g, fieldrover::world::Cell s,
                                         fieldrover::world::Cell t) {
  const int n = g.cols() * g.rows();
  std::vector<std::optional<Cost>> d(static_cast<std::size_t>(n));
  d[static_cast<std::size_t>(s.row * g.cols() + s.col)] = Cost{0, 0};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r < g.rows(); ++r) {
      for (int c = 0; c < g.cols(); ++c) {
        const auto& here = d[static_cast<std::size_t>(r * g.cols() + c)];
        if (!here || !passable(g, c, r)) continue;
        for (int dr = -1; dr <= 1; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            if (!passable(g, c + dc, r + dr)) continue;
            const bool diag = dr != 0 && dc != 0;
            if (diag && (!passable(g, c + dc, r) || !passable(g, c, r + dr))) continue;
            const Cost cand{here->a + (diag ? 0 : 1), here->b + (diag ? 1 : 0)};
            auto& there = d[static_cast<std::size_t>((r + dr) * g.cols() + c + dc)];
            if (!there || compare(cand, *there) < 0) {
              there = cand;
              changed = true;
            }
          }
        }
      }
    }
  }
  return d[static_cast<std::size_t>(t.row * g.cols() + t.col)];
}

// ---- largest empty rectangle ----------------------------------------------

/// Tries every rectangle with edges on obstacle/border coordinates and
/// checks it against every obstacle directly.
inline std::optional<fieldrover::yieldkit::PixelRect> largest_empty_rect(
    int W, int H, const std::vector<fieldrover::yieldkit::PixelRect>& boxes) {
  std::vector<int> xs{0, W}, ys{0, H};
  for (const auto& b : boxes) {
    xs.push_back(std::clamp(b.x, 0, W));
    xs.push_back(std::clamp(b.x + b.width, 0, W));
    ys.push_back(std::clamp(b.y, 0, H));
    ys.push_back(std::clamp(b.y + b.height, 0, H));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::optional<fieldrover::yieldkit::PixelRect> best;
  for (int y0 : ys)
    for (int y1 : ys)
      for (int x0 : xs)
        for (int x1 : xs) {
          if (y1 <= y0 || x1 <= x0) continue;
          bool free = true;
          for (const auto& b : boxes) {
            const bool overlap = x0 < b.x + b.width && b.x < x1 && y0 < b.y + b.height && b.y < y1;
            if (overlap) {
              free = false;
              break;
            }
          }
          if (!free) continue;
          const fieldrover::yieldkit::PixelRect r{x0, y0, x1 - x0, y1 - y0};
          if (!best) {
            best = r;
            continue;
          }
          const long long a = static_cast<long long>(r.width) * r.height;
          const long long ba = static_cast<long long>(best->width) * best->height;
          const auto key = std::make_tuple(-a, r.y, r.x, r.height);
          const auto bkey = std::make_tuple(-ba, best->y, best->x, best->height);
          if (key < bkey) best = r;
        }
  return best;
}

// ---- detection matching ---------------------------------------------------

inline double box_iou(const fieldrover::yieldkit::BoundingBox& p, const fieldrover::yieldkit::BoundingBox& q) {
  const double ax0 = p.cx - p.w / 2, ax1 = p.cx + p.w / 2, ay0 = p.cy - p.h / 2, ay1 = p.cy + p.h / 2;
  const double bx0 = q.cx - q.w / 2, bx1 = q.cx + q.w / 2, by0 = q.cy - q.h / 2, by1 = q.cy + q.h / 2;
  const double w = std::min(ax1, bx1) - std::max(ax0, bx0);
  const double h = std::min(ay1, by1) - std::max(ay0, by0);
  if (w <= 0 || h <= 0) return 0.0;
  return w * h / (p.w * p.h + q.w * q.h - w * h);
}

struct MatchOutcome {
  std::int64_t tp = 0, fn = 0, fp = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (pred, gt), by pred rank
};

/// Enumerates every partial injective assignment of surviving predictions
/// to ground truth with IoU at or above the threshold and keeps the one that
/// is lexicographically best when predictions are read in confidence order
/// and each is scored by (IoU, lower gt index).
inline MatchOutcome exhaustive_match(const std::vector<fieldrover::yieldkit::BoundingBox>& pred,
                                     const std::vector<fieldrover::yieldkit::BoundingBox>& gt, double conf_thr,
                                     double iou_thr) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < pred.size(); ++i)
    if (pred[i].confidence.value_or(1.0) >= conf_thr) order.push_back(i);
  // insertion sort: stable, descending confidence
  for (std::size_t i = 1; i < order.size(); ++i)
    for (std::size_t j = i; j > 0 && pred[order[j - 1]].confidence.value_or(1.0) <
                                         pred[order[j]].confidence.value_or(1.0);
         --j)
      std::swap(order[j - 1], order[j]);

  const std::size_t n = order.size();
  std::vector<long> assign(n, -1), best_assign;
  std::vector<bool> used(gt.size(), false);
  bool have_best = false;

  // Score of one prediction's choice: higher is better.
  auto score = [&](std::size_t k, long g) -> std::pair<double, long> {
    if (g < 0) return {-1.0, 0};
    return {box_iou(pred[order[k]], gt[static_cast<std::size_t>(g)]), -g};
  };
  auto better = [&](const std::vector<long>& a, const std::vector<long>& b) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto sa = score(k, a[k]);
      const auto sb = score(k, b[k]);
      if (sa != sb) return sa > sb;
    }
    return false;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      if (!have_best || better(assign, best_assign)) {
        best_assign = assign;
        have_best = true;
      }
      return;
    }
    assign[k] = -1;
    self(self, k + 1);
    for (std::size_t g = 0; g < gt.size(); ++g) {
      if (used[g] || box_iou(pred[order[k]], gt[g]) < iou_thr) continue;
      used[g] = true;
      assign[k] = static_cast<long>(g);
      self(self, k + 1);
      used[g] = false;
      assign[k] = -1;
    }
  };
  rec(rec, 0);

  MatchOutcome out;
  for (std::size_t k = 0; k < n; ++k) {
    if (best_assign.size() == n && best_assign[k] >= 0) {
      out.pairs.emplace_back(order[k], static_cast<std::size_t>(best_assign[k]));
    }
  }
  out.tp = static_cast<std::int64_t>(out.pairs.size());
  out.fp = static_cast<std::int64_t>(n) - out.tp;
  out.fn = static_cast<std::int64_t>(gt.size()) - out.tp;
  return out;
}

// ---- average precision ----------------------------------------------------

/// Ranked hit list -> AP by building the PR curve and integrating the
/// monotone envelope over recall, one distinct recall level at a time.
inline double ap_from_hits(const std::vector<bool>& ranked_hits, std::size_t n_gt) {
  std::vector<std::pair<double, double>> pr;  // (recall, precision)
  std::size_t tp = 0;
  for (std::size_t k = 0; k < ranked_hits.size(); ++k) {
    tp += ranked_hits[k] ? 1 : 0;
    pr.emplace_back(static_cast<double>(tp) / static_cast<double>(n_gt),
                    static_cast<double>(tp) / static_cast<double>(k + 1));
  }
  double area = 0.0;
  double prev_recall = 0.0;
  for (std::size_t i = 0; i < pr.size(); ++i) {
    const double r = pr[i].first;
    if (r <= prev_recall) continue;
    double p_max = 0.0;
    for (const auto& [rr, pp] : pr)
      if (rr >= r) p_max = std::max(p_max, pp);
    area += (r - prev_recall) * p_max;
    prev_recall = r;
  }
  return area;
}

/// Full AP: per-image matching through exhaustive_match (no confidence
/// cut), then a global ranking by (confidence desc, image, index).
inline double average_precision(const std::vector<fieldrover::yieldkit::ImageDetections>& images, double iou_thr) {
  struct Entry {
    double conf;
    std::size_t img, idx;
    bool hit;
  };
  std::vector<Entry> all;
  std::size_t n_gt = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    n_gt += images[i].gt.size();
    const auto m = exhaustive_match(images[i].pred, images[i].gt, -1.0, iou_thr);
    std::vector<bool> hit(images[i].pred.size(), false);
    for (const auto& [p, g] : m.pairs) hit[p] = true;
    for (std::size_t k = 0; k < images[i].pred.size(); ++k)
      all.push_back({images[i].pred[k].confidence.value_or(1.0), i, k, hit[k]});
  }
  std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) {
    return std::make_tuple(-a.conf, a.img, a.idx) < std::make_tuple(-b.conf, b.img, b.idx);
  });
  std::vector<bool> hits;
  for (const auto& e : all) hits.push_back(e.hit);
  return ap_from_hits(hits, n_gt);
}

// ---- reactive avoidance ---------------------------------------------------

/// True when p lies in the closed rectangle with corners a, b, c, d (in order).
inline bool in_rectangle(fieldrover::Vec2 p, const std::array<fieldrover::Vec2, 4>& q) {
  for (int i = 0; i < 4; ++i) {
    const auto& s = q[static_cast<std::size_t>(i)];
    const auto& e = q[static_cast<std::size_t>((i + 1) % 4)];
    if ((e.x - s.x) * (p.y - s.y) - (e.y - s.y) * (p.x - s.x) < 0) return false;
  }
  return true;
}

/// Scores every candidate deviation independently and returns the smallest
/// |deviation| (right side first on ties) whose corridor band, `margin` to
/// each side of the probe, holds no point; nothing when none do.
inline std::optional<double> best_deviation(fieldrover::Vec2 origin, double direct, double lookahead, double margin,
                                            double step_rad, double max_dev_rad,
                                            const std::vector<fieldrover::Vec2>& points) {
  std::vector<double> cands;
  const int kmax = static_cast<int>(std::floor(max_dev_rad / step_rad + 1e-9));
  for (int k = -kmax; k <= kmax; ++k) cands.push_back(k * step_rad);
  std::optional<double> best;
  for (double d : cands) {
    const double c = std::cos(direct + d), s = std::sin(direct + d);
    const fieldrover::Vec2 end{origin.x + lookahead * c, origin.y + lookahead * s};
    const fieldrover::Vec2 side{-s * margin, c * margin};
    // Counter-clockwise corners of the corridor band.
    const std::array<fieldrover::Vec2, 4> band{fieldrover::Vec2{origin.x - side.x, origin.y - side.y},
                                               fieldrover::Vec2{end.x - side.x, end.y - side.y},
                                               fieldrover::Vec2{end.x + side.x, end.y + side.y},
                                               fieldrover::Vec2{origin.x + side.x, origin.y + side.y}};
    bool blocked = false;
    for (const auto& p : points) blocked = blocked || in_rectangle(p, band);
    if (blocked) continue;
    if (!best || std::abs(d) < std::abs(*best) - 1e-12 || (std::abs(std::abs(d) - std::abs(*best)) <= 1e-12 && d < *best))
      best = d;
  }
  return best;
}

}  // namespace oracle
